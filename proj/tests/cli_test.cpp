#include "sextic/cli.hpp"

#include <gtest/gtest.h>

#include <filesystem>
#include <sstream>

using namespace sextic;
namespace fs = std::filesystem;

namespace {

std::string run(cli::RunConfig cfg, int expect = cli::kPass)
{
    std::ostringstream os;
    EXPECT_EQ(cli::dispatch(cfg, os), expect) << cfg.command;
    return os.str();
}

cli::RunConfig config(std::string command, cli::Format f = cli::Format::Json)
{
    cli::RunConfig c;
    c.command = std::move(command);
    c.format = f;
    return c;
}

struct TempDir {
    fs::path path;
    TempDir() : path(fs::temp_directory_path() / ("sextic-cli-test-" + std::to_string(::getpid())))
    {
        fs::remove_all(path);
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
};

} // namespace

TEST(Cli, ParseRange)
{
    const auto r = cli::parse_range("-50..50");
    EXPECT_EQ(r.lo, -50);
    EXPECT_EQ(r.hi, 50);
    EXPECT_EQ(cli::parse_range("7..7").hi, 7);
    EXPECT_THROW(cli::parse_range("5..1"), cli::UsageError);
    EXPECT_THROW(cli::parse_range("5-1"), cli::UsageError);
    EXPECT_THROW(cli::parse_range("a..3"), cli::UsageError);
    EXPECT_THROW(cli::parse_range("1..99999999999999999999999"), cli::UsageError);
}

TEST(Cli, ValuesAreExact)
{
    EXPECT_EQ(cli::parse_value("m", "-6/4"), make_rat(-3, 2));
    EXPECT_THROW(cli::parse_value("m", "1.5"), cli::UsageError);
    EXPECT_THROW(cli::parse_value("m", "1/0"), cli::UsageError);
    EXPECT_THROW(cli::parse_integer("x", "1/2"), cli::UsageError);
    EXPECT_EQ(cli::parse_integer("x", "4/2"), 2);
}

TEST(Cli, CsvQuoting)
{
    EXPECT_EQ(cli::csv_cell(cli::json("a,b")), "\"a,b\"");
    EXPECT_EQ(cli::csv_cell(cli::json("say \"hi\"")), "\"say \"\"hi\"\"\"");
    EXPECT_EQ(cli::csv_cell(cli::json::array({3, 3})), "3;3");
    EXPECT_EQ(cli::csv_cell(cli::json(nullptr)), "");
    EXPECT_EQ(cli::csv_cell(cli::json(true)), "true");
}

TEST(Cli, FormEvalBigValuesAreStrings)
{
    auto c = config("form eval");
    c.m = "1000000000000";
    c.x = "1000000";
    c.y = "-3";
    const auto j = cli::json::parse(run(c));
    ASSERT_TRUE(j.at("value").is_string());
    EXPECT_EQ(j.at("value").get<std::string>(),
              family::eval_form(Rat(Int("1000000000000")), {Int(1000000), Int(-3)}).get_num().get_str());
}

TEST(Cli, MissingOptionIsUsageError)
{
    auto c = config("thue verify");
    c.m = "1";
    EXPECT_THROW(run(c), cli::UsageError); // no --bound
    c.bound = 10;
    c.m_range = cli::Range{0, 1};
    EXPECT_THROW(run(c), cli::UsageError); // both --m and --m-range
    EXPECT_THROW(run(config("nonsense")), cli::UsageError);
}

TEST(Cli, ThueSolveFlagsDivisorViolationsOnly)
{
    // lambda = 397 = F_3(1,2) does not divide 27*27 = 729: informational
    auto c = config("thue solve");
    c.m = "3";
    c.lambda = "397";
    c.bound = 5;
    run(c, cli::kPass);
    // trivial solutions only for a divisor
    c.lambda = "-27";
    const auto out = run(c, cli::kPass);
    EXPECT_NE(out.find("\"solutions\":6"), std::string::npos);
}

TEST(Cli, ScanOutputIndependentOfJobs)
{
    auto c = config("scan cubic");
    c.range = cli::Range{-1, 70};
    const auto one = run(c);
    c.jobs = 3;
    EXPECT_EQ(run(c), one);
    c.format = cli::Format::Csv;
    const auto csv = run(c);
    EXPECT_EQ(csv.substr(0, csv.find('\n')), "kind,m,n,dt1,dt2,degree,compositum");
}

TEST(Cli, CheckpointRoundTrip)
{
    TempDir d;
    cli::Checkpoint c;
    c.kind = scan::ScanKind::Sextic;
    c.lo = -3;
    c.hi = 40;
    c.last_row = 10;
    c.pairs = 123456789012ULL;
    c.classified = 5;
    c.hits.push_back({-1, 4, {{6}}, {{3, 3}}, 3, "C6"});
    c.hits.push_back({2, 7, {{2, 2, 2}}, {{1, 1, 1, 1, 1, 1}}, 6, "C6"});
    const auto p = d.path / "x.ckpt.jsonl";
    cli::write_checkpoint(p, c);
    const auto r = cli::read_checkpoint(p);
    EXPECT_TRUE(r.same_scan(c));
    EXPECT_EQ(r.last_row, 10);
    EXPECT_EQ(r.pairs, c.pairs);
    EXPECT_EQ(r.classified, 5u);
    ASSERT_EQ(r.hits.size(), 2u);
    EXPECT_EQ(r.hits[1].n, 7);
    EXPECT_EQ(r.hits[1].dt2.parts, (std::vector<int>{1, 1, 1, 1, 1, 1}));
    EXPECT_FALSE(fs::exists(p.string() + ".tmp"));
}

TEST(Cli, CheckpointDefectsAreDetected)
{
    TempDir d;
    cli::Checkpoint c;
    c.lo = 0;
    c.hi = 20;
    c.last_row = 5;
    c.hits.push_back({0, 3, {{6}}, {{2, 2, 2}}, 3, "C6"});
    const auto p = d.path / "y.ckpt.jsonl";
    cli::write_checkpoint(p, c);
    std::string good;
    {
        std::ifstream f(p);
        good.assign(std::istreambuf_iterator<char>(f), {});
    }
    auto with = [&](const std::string& text) {
        std::ofstream(p, std::ios::trunc) << text;
        return p;
    };
    auto replace = [&](std::string from, std::string to) {
        std::string s = good;
        s.replace(s.find(from), from.size(), to);
        return s;
    };
    EXPECT_THROW(cli::read_checkpoint(with("")), cli::CheckpointError);
    EXPECT_THROW(cli::read_checkpoint(with(good.substr(0, good.rfind("{\"kind\"")))), cli::CheckpointError);
    EXPECT_THROW(cli::read_checkpoint(with(replace("\"last_row\":5", "\"last_row\":25"))), cli::CheckpointError);
    EXPECT_THROW(cli::read_checkpoint(with(replace("\"last_row\":5", "\"last_row\":-2"))), cli::CheckpointError);
    EXPECT_THROW(cli::read_checkpoint(with(replace("\"dt1\":[6]", "\"dt1\":[5]"))), cli::CheckpointError);
    EXPECT_THROW(cli::read_checkpoint(with(replace("\"n\":3", "\"n\":0"))), cli::CheckpointError);
    EXPECT_THROW(cli::read_checkpoint(with(replace("\"pairs\":\"0\"", "\"pairs\":\"-1\""))), cli::CheckpointError);
    EXPECT_THROW(cli::read_checkpoint(with(replace("\"kind\":\"cubic\",\"lo\"", "\"kind\":\"quartic\",\"lo\""))),
                 cli::CheckpointError);
    EXPECT_THROW(cli::read_checkpoint(with(good + "{\"type\":\"hit\"}\n")), cli::CheckpointError);
    EXPECT_NO_THROW(cli::read_checkpoint(with(good)));
}

TEST(Cli, ResumeAfterInterruptionMatchesUninterruptedRun)
{
    TempDir d;
    auto c = config("scan cubic");
    c.range = cli::Range{-1, 150};
    const auto base = run(c);

    c.cache_dir = d.path.string();
    c.checkpoint_interval = 3;
    c.stop_after_rows = 20;
    const auto partial = run(c);
    EXPECT_NE(partial.find("\"complete\":false"), std::string::npos);
    c.stop_after_rows.reset();
    EXPECT_EQ(run(c), base);
    EXPECT_EQ(run(c), base); // replayed entirely from the finished checkpoint
}

TEST(Cli, MismatchedCheckpointIsRefused)
{
    TempDir d;
    auto c = config("scan sextic");
    c.range = cli::Range{-5, 5};
    c.cache_dir = d.path.string();
    c.stop_after_rows = 2;
    run(c);
    const auto p = cli::checkpoint_path(d.path.string(), scan::ScanKind::Sextic, {-5, 5});
    auto ck = cli::read_checkpoint(p);
    ck.version = "older";
    cli::write_checkpoint(p, ck);
    EXPECT_THROW(run(c), cli::UsageError);
}

TEST(Cli, VerifyTable2AndMutation)
{
    const auto t2 = run(config("verify table2", cli::Format::Text));
    EXPECT_NE(t2.find("11/11 table2 checks pass"), std::string::npos);
    auto c = config("verify identities", cli::Format::Text);
    c.mutate = "b";
    const auto out = run(c, cli::kViolation);
    EXPECT_NE(out.find("FAIL b "), std::string::npos);
    EXPECT_NE(out.find("failed: b\n"), std::string::npos);
    c.mutate = "c";
    EXPECT_THROW(run(c), cli::UsageError);
}
