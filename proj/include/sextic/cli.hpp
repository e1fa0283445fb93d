#pragma once

// Command implementations behind the sextic executable. Argument parsing
// lives in tools/sextic.cpp; everything here takes a parsed RunConfig and
// writes to a stream, so tests can drive it directly.

#include "sextic/exactmath.hpp"
#include "sextic/family.hpp"
#include "sextic/golden.hpp"
#include "sextic/report.hpp"
#include "sextic/resolvent.hpp"
#include "sextic/scan.hpp"
#include "sextic/thue.hpp"

#include "json.hpp"

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <ostream>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace sextic::cli {

using json = nlohmann::ordered_json;

inline constexpr const char* kVersion = "sextic-1.0";

enum ExitCode { kPass = 0, kViolation = 1, kUsage = 2, kFault = 3 };

enum class Format { Text, Json, Csv };

/// Bad arguments or a precondition the caller can fix.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Checkpoint file unreadable or inconsistent.
struct CheckpointError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Range {
    long lo = 0, hi = 0;
};

/// "A..B" with A <= B.
inline Range parse_range(const std::string& text)
{
    const auto dots = text.find("..");
    if (dots == std::string::npos)
        throw UsageError("range must look like A..B: '" + text + "'");
    Int lo, hi;
    try {
        lo = parse_int(text.substr(0, dots));
        hi = parse_int(text.substr(dots + 2));
    } catch (const std::invalid_argument& e) {
        throw UsageError(std::string("bad range: ") + e.what());
    }
    if (!lo.fits_slong_p() || !hi.fits_slong_p())
        throw UsageError("range endpoints too large: '" + text + "'");
    if (hi < lo)
        throw UsageError("empty range: '" + text + "'");
    return {lo.get_si(), hi.get_si()};
}

inline Rat parse_value(const std::string& name, const std::string& text)
{
    try {
        return parse_rat(text);
    } catch (const std::invalid_argument& e) {
        throw UsageError("--" + name + ": " + e.what());
    }
}

inline Int parse_integer(const std::string& name, const std::string& text)
{
    const Rat r = parse_value(name, text);
    if (!is_integer(r))
        throw UsageError("--" + name + " must be an integer, got " + text);
    return r.get_num();
}

inline Format parse_format(const std::string& s)
{
    if (s == "text")
        return Format::Text;
    if (s == "json")
        return Format::Json;
    if (s == "csv")
        return Format::Csv;
    throw UsageError("--format must be text, json or csv");
}

struct RunConfig {
    std::string command;    // "form eval", "scan cubic", ...
    std::optional<std::string> m, n, a, b, x, y, z, lambda; // raw "p/q" or integer text
    std::optional<std::string> poly;                          // poly factor input
    std::optional<long> bound;
    std::optional<Range> range, m_range;
    unsigned jobs = 1;
    Format format = Format::Text;
    std::optional<std::string> out;
    std::optional<std::string> cache_dir;
    long checkpoint_interval = 50; // rows between checkpoint writes
    std::optional<long> stop_after_rows; // test hook: simulate an interrupted scan
    std::optional<std::string> mutate;   // test hook for verify identities
    bool color = false;
};

// ---------------------------------------------------------------------------
// Output

/// CSV columns per record kind, fixed order.
inline const std::map<std::string, std::vector<std::string>>& csv_columns()
{
    static const std::map<std::string, std::vector<std::string>> cols{
        {"form", {"m", "x", "y", "value", "trivial", "orbit_representative"}},
        {"factor", {"input", "unit", "factor", "multiplicity", "degree"}},
        {"iso", {"a", "b", "equal", "trivial_pair", "splits", "witness_resolvent", "witness_roots"}},
        {"intersect", {"a", "b", "relation", "degree", "compositum", "g1", "g2", "dt1", "dt2", "swapped"}},
        {"thue_solution", {"m", "lambda", "x", "y", "trivial", "orbit_representative"}},
        {"thue_solve", {"m", "lambda", "bound", "divides", "solutions", "nontrivial"}},
        {"thue_verify", {"m", "bound", "modulus", "divisors", "solutions", "nontrivial", "ok"}},
        {"thue_summary", {"m_lo", "m_hi", "bound", "checked", "failed"}},
        {"cubic", {"m", "n", "dt1", "dt2", "degree", "compositum"}},
        {"sextic", {"m", "n", "dt1", "dt2", "degree", "compositum"}},
        {"scan_summary",
         {"scan", "lo", "hi", "pairs", "classified", "hits", "complete", "expected_match"}},
        {"check", {"suite", "id", "passed", "description", "detail"}},
        {"check_summary", {"suite", "passed", "failed"}},
    };
    return cols;
}

inline std::string csv_cell(const json& v)
{
    std::string s;
    if (v.is_null())
        return s;
    if (v.is_string())
        s = v.get<std::string>();
    else if (v.is_array()) {
        for (std::size_t i = 0; i < v.size(); ++i)
            s += (i ? ";" : "") + csv_cell(v[i]);
    } else
        s = v.dump();
    if (s.find_first_of(",\"\n") != std::string::npos) {
        std::string q = "\"";
        for (char c : s)
            q += c == '"' ? std::string("\"\"") : std::string(1, c);
        return q + "\"";
    }
    return s;
}

class Output {
public:
    Output(std::ostream& os, Format fmt, bool color) : os_(os), fmt_(fmt), color_(color) {}

    /// Emits one record: its JSON line, its CSV row, or `text` (skipped when empty).
    void record(const json& j, const std::string& text)
    {
        switch (fmt_) {
        case Format::Json:
            os_ << j.dump() << '\n';
            break;
        case Format::Csv: {
            const std::string kind = j.at("kind").get<std::string>();
            const auto& cols = csv_columns().at(kind);
            if (headers_.insert(kind).second) {
                os_ << "kind";
                for (const auto& c : cols)
                    os_ << ',' << c;
                os_ << '\n';
            }
            os_ << kind;
            for (const auto& c : cols)
                os_ << ',' << (j.contains(c) ? csv_cell(j.at(c)) : std::string());
            os_ << '\n';
            break;
        }
        case Format::Text:
            if (!text.empty())
                os_ << text << '\n';
            break;
        }
    }

    std::string mark(bool ok) const
    {
        if (!color_)
            return ok ? "PASS" : "FAIL";
        return ok ? "\033[32mPASS\033[0m" : "\033[31mFAIL\033[0m";
    }

    void flush() { os_.flush(); }

private:
    std::ostream& os_;
    Format fmt_;
    bool color_;
    std::set<std::string> headers_;
};

inline json dt_json(const resolvent::DecompositionType& d)
{
    json a = json::array();
    for (int p : d.parts)
        a.push_back(p);
    return a;
}

inline json point_json(const family::LatticePoint& p) { return json::array({p.x.get_str(), p.y.get_str()}); }

inline std::string str(const Int& v) { return v.get_str(); }
inline std::string str(const Rat& v) { return sextic::to_string(v); }

template <class T>
const T& need(const std::optional<T>& v, const char* flag)
{
    if (!v)
        throw UsageError(std::string("missing required option --") + flag);
    return *v;
}

// ---------------------------------------------------------------------------
// form eval, poly factor

inline int cmd_form_eval(const RunConfig& cfg, Output& out)
{
    const Rat m = parse_value("m", need(cfg.m, "m"));
    const family::LatticePoint p{parse_integer("x", need(cfg.x, "x")), parse_integer("y", need(cfg.y, "y"))};
    const Rat v = family::eval_form(m, p);
    const auto orbit = family::c6_orbit(p);
    const bool trivial = family::is_trivial(p);
    json j{{"kind", "form"}, {"m", str(m)}, {"x", str(p.x)}, {"y", str(p.y)}, {"value", str(v)},
           {"trivial", trivial}, {"orbit_representative", point_json(orbit.representative)}};
    json pts = json::array();
    std::string orbit_text;
    for (const auto& q : orbit.points) {
        pts.push_back(point_json(q));
        orbit_text += " " + family::to_string(q);
    }
    j["orbit"] = pts;
    out.record(j, "F_" + str(m) + family::to_string(p) + " = " + str(v) + "\n" +
                      (trivial ? "trivial" : "nontrivial") + "\norbit:" + orbit_text);
    return kPass;
}

/// Factors --poly, or f6_m when only --m is given.
inline int cmd_poly_factor(const RunConfig& cfg, Output& out)
{
    exactmath::UniPoly p;
    if (cfg.poly) {
        try {
            p = exactmath::parse_poly(*cfg.poly);
        } catch (const std::invalid_argument& e) {
            throw UsageError(std::string("polynomial: ") + e.what());
        }
    } else if (cfg.m) {
        p = family::simplest_sextic_poly(parse_value("m", *cfg.m));
    } else {
        throw UsageError("poly factor needs a polynomial argument or --m");
    }
    if (p.degree() > exactmath::kMaxFactorDegree)
        throw UsageError("degree " + std::to_string(p.degree()) + " exceeds the supported maximum " +
                         std::to_string(exactmath::kMaxFactorDegree));
    if (p.is_zero())
        throw UsageError("cannot factor the zero polynomial");
    exactmath::Factorization fac;
    if (p.degree() == 0)
        fac.unit = p.lead();
    else
        fac = exactmath::factor_over_Q(p);
    const std::string input = exactmath::format_poly(p);
    std::string text = input + " = " + str(fac.unit);
    for (const auto& f : fac.factors) {
        text += " * (" + exactmath::format_poly(f.poly) + ")";
        if (f.multiplicity > 1)
            text += "^" + std::to_string(f.multiplicity);
    }
    if (fac.factors.empty())
        out.record(json{{"kind", "factor"}, {"input", input}, {"unit", str(fac.unit)}}, text);
    for (std::size_t i = 0; i < fac.factors.size(); ++i) {
        const auto& f = fac.factors[i];
        out.record(json{{"kind", "factor"},
                        {"input", input},
                        {"unit", str(fac.unit)},
                        {"factor", exactmath::format_poly(f.poly)},
                        {"multiplicity", f.multiplicity},
                        {"degree", f.poly.degree()}},
                   i == 0 ? text : std::string());
    }
    return kPass;
}

// ---------------------------------------------------------------------------
// iso, intersect

/// a from --a, or --m for an integer family member.
inline Rat first_param(const RunConfig& cfg)
{
    if (cfg.a && cfg.m)
        throw UsageError("give either --a or --m, not both");
    return cfg.m ? parse_value("m", *cfg.m) : parse_value("a", need(cfg.a, "a"));
}

/// b from --b (or --n), or from --z via the parametrization of fields equal
/// to a's.
inline Rat second_param(const RunConfig& cfg, const Rat& a)
{
    if (static_cast<int>(cfg.b.has_value()) + cfg.n.has_value() + cfg.z.has_value() > 1)
        throw UsageError("give only one of --b, --n, --z");
    if (cfg.n)
        return parse_value("n", *cfg.n);
    if (cfg.z) {
        try {
            return resolvent::param_from_z(a, parse_value("z", *cfg.z));
        } catch (const std::domain_error& e) {
            throw UsageError(e.what());
        }
    }
    return parse_value("b", need(cfg.b, "b"));
}

inline json intersect_json(const Rat& a, const Rat& b, const resolvent::IntersectionResult& r)
{
    return json{{"kind", "intersect"},
                {"a", str(a)},
                {"b", str(b)},
                {"relation", resolvent::to_string(r.relation)},
                {"degree", r.degree},
                {"compositum", r.compositum},
                {"g1", family::to_string(r.g1)},
                {"g2", family::to_string(r.g2)},
                {"dt1", dt_json(r.dt1)},
                {"dt2", dt_json(r.dt2)},
                {"swapped", r.swapped}};
}

inline std::string intersect_text(const resolvent::IntersectionResult& r)
{
    return std::string("intersection degree ") + std::to_string(r.degree) + " (" +
           resolvent::to_string(r.relation) + ", compositum " + r.compositum + ")\nG1=" +
           family::to_string(r.g1) + " G2=" + family::to_string(r.g2) + " DT=" + resolvent::to_string(r.dt1) +
           " / " + resolvent::to_string(r.dt2) + (r.swapped ? " (parameters swapped)" : "");
}

inline int cmd_iso(const RunConfig& cfg, Output& out)
{
    const Rat a = first_param(cfg);
    const Rat b = second_param(cfg, a);
    const auto r = resolvent::iso_test(a, b);
    json j{{"kind", "iso"}, {"a", str(a)}, {"b", str(b)}, {"equal", r.equal}, {"trivial_pair", r.trivial_pair}};
    std::string text = "a=" + str(a) + " b=" + str(b) + ": " + (r.equal ? "equal" : "not equal");
    if (r.trivial_pair) {
        text += " (trivial pair)";
    } else {
        j["splits"] = json::array({r.splits[0], r.splits[1]});
        if (r.witness) {
            json roots = json::array();
            std::string rt;
            for (const auto& x : r.witness->roots) {
                roots.push_back(str(x));
                rt += (rt.empty() ? "" : ", ") + str(x);
            }
            j["witness_resolvent"] = r.witness->which;
            j["witness_roots"] = roots;
            text += "\nresolvent " + std::to_string(r.witness->which) + " splits, roots: " + rt;
        }
        const auto ir = resolvent::classify_intersection(a, b);
        j["degree"] = ir.degree;
        j["dt1"] = dt_json(ir.dt1);
        j["dt2"] = dt_json(ir.dt2);
        text += "\n" + intersect_text(ir);
    }
    out.record(j, text);
    return kPass;
}

inline int cmd_intersect(const RunConfig& cfg, Output& out)
{
    const Rat a = first_param(cfg);
    const Rat b = second_param(cfg, a);
    if (a == b || a + b + 3 == 0)
        throw UsageError("intersect requires b != a and b != -a-3");
    const auto r = resolvent::classify_intersection(a, b);
    out.record(intersect_json(a, b, r), "a=" + str(a) + " b=" + str(b) + ": " + intersect_text(r));
    return kPass;
}

// ---------------------------------------------------------------------------
// thue

inline long need_bound(const RunConfig& cfg)
{
    const long b = need(cfg.bound, "bound");
    if (b < 1 || b > 100000)
        throw UsageError("--bound must be in [1, 100000]");
    return b;
}

inline json solution_json(const Int& m, const thue::SolutionRecord& s)
{
    return json{{"kind", "thue_solution"},
                {"m", str(m)},
                {"lambda", str(s.lambda)},
                {"x", str(s.point.x)},
                {"y", str(s.point.y)},
                {"trivial", s.trivial},
                {"orbit_representative", point_json(s.orbit_id)}};
}

inline std::string solution_text(const thue::SolutionRecord& s)
{
    return "  " + family::to_string(s.point) + (s.trivial ? " trivial" : " NONTRIVIAL") + " orbit " +
           family::to_string(s.orbit_id);
}

/// Solutions of F_m = lambda in the box. A nontrivial solution with lambda
/// dividing 27(m^2+3m+9) is a violation; other lambdas are informational.
inline int cmd_thue_solve(const RunConfig& cfg, Output& out)
{
    const Int m = parse_integer("m", need(cfg.m, "m"));
    const Int lambda = parse_integer("lambda", need(cfg.lambda, "lambda"));
    if (lambda == 0)
        throw UsageError("--lambda must be nonzero");
    const long bound = need_bound(cfg);
    const auto sols = thue::solve_thue(m, lambda, bound);
    const bool divisor = divides(lambda, Int(27 * thue::k_of(m)));
    std::size_t nontrivial = 0;
    for (const auto& s : sols)
        nontrivial += !s.trivial;
    out.record(json{{"kind", "thue_solve"},
                    {"m", str(m)},
                    {"lambda", str(lambda)},
                    {"bound", bound},
                    {"divides", divisor},
                    {"solutions", sols.size()},
                    {"nontrivial", nontrivial}},
               "F_" + str(m) + "(x,y) = " + str(lambda) + ", |x|,|y| <= " + std::to_string(bound) + ": " +
                   std::to_string(sols.size()) + " solutions, " + std::to_string(nontrivial) + " nontrivial" +
                   (divisor ? "" : " (lambda does not divide 27(m^2+3m+9))"));
    for (const auto& s : sols)
        out.record(solution_json(m, s), solution_text(s));
    return divisor && nontrivial ? kViolation : kPass;
}

inline int cmd_thue_verify(const RunConfig& cfg, Output& out)
{
    if (cfg.m && cfg.m_range)
        throw UsageError("give either --m or --m-range, not both");
    Range r;
    if (cfg.m_range) {
        r = *cfg.m_range;
    } else {
        const Int m = parse_integer("m", need(cfg.m, "m"));
        if (!m.fits_slong_p())
            throw UsageError("--m too large");
        r = {m.get_si(), m.get_si()};
    }
    const long bound = need_bound(cfg);
    const auto reports = thue::solve_range(r.lo, r.hi, bound, cfg.jobs);
    long failed = 0;
    for (const auto& rep : reports) {
        std::size_t sols = 0;
        for (const auto& l : rep.per_lambda)
            sols += l.solutions.size();
        const bool ok = rep.ok();
        failed += !ok;
        out.record(json{{"kind", "thue_verify"},
                        {"m", str(rep.m)},
                        {"bound", bound},
                        {"modulus", str(rep.modulus)},
                        {"divisors", rep.per_lambda.size()},
                        {"solutions", sols},
                        {"nontrivial", rep.counterexamples.size()},
                        {"ok", ok}},
                   out.mark(ok) + " m=" + str(rep.m) + " 27(m^2+3m+9)=" + str(rep.modulus) + " divisors=" +
                       std::to_string(rep.per_lambda.size()) + " solutions=" + std::to_string(sols) +
                       " nontrivial=" + std::to_string(rep.counterexamples.size()));
        for (const auto& s : rep.counterexamples)
            out.record(solution_json(rep.m, s), solution_text(s));
        for (const auto& l : rep.per_lambda)
            if (!l.matches_trivial && rep.counterexamples.empty())
                out.record(json{{"kind", "thue_solve"},
                                {"m", str(rep.m)},
                                {"lambda", str(l.lambda)},
                                {"bound", bound},
                                {"divides", true},
                                {"solutions", l.solutions.size()},
                                {"nontrivial", 0}},
                           "  lambda=" + str(l.lambda) + ": trivial solutions differ from the expected set");
    }
    out.record(json{{"kind", "thue_summary"},
                    {"m_lo", r.lo},
                    {"m_hi", r.hi},
                    {"bound", bound},
                    {"checked", reports.size()},
                    {"failed", failed}},
               std::to_string(reports.size() - failed) + "/" + std::to_string(reports.size()) +
                   " values of m have only the trivial solutions");
    return failed ? kViolation : kPass;
}

// ---------------------------------------------------------------------------
// scan + checkpoints

struct Checkpoint {
    std::string version = kVersion;
    scan::ScanKind kind = scan::ScanKind::Cubic;
    long lo = 0, hi = 0;
    int prefilter_primes = 8;
    long last_row = 0; // last completed row; lo - 1 when none
    std::uint64_t pairs = 0, classified = 0;
    std::vector<scan::ScanHit> hits;

    bool same_scan(const Checkpoint& o) const
    {
        return version == o.version && kind == o.kind && lo == o.lo && hi == o.hi &&
               prefilter_primes == o.prefilter_primes;
    }
};

inline json hit_json(scan::ScanKind kind, const scan::ScanHit& h)
{
    return json{{"kind", scan::to_string(kind)}, {"m", h.m},           {"n", h.n},
                {"dt1", dt_json(h.dt1)},         {"dt2", dt_json(h.dt2)}, {"degree", h.degree},
                {"compositum", h.compositum}};
}

inline std::filesystem::path checkpoint_path(const std::string& dir, scan::ScanKind kind, const Range& r)
{
    return std::filesystem::path(dir) /
           ("scan-" + std::string(scan::to_string(kind)) + "_" + std::to_string(r.lo) + "_" + std::to_string(r.hi) +
            ".ckpt.jsonl");
}

/// Header, progress line, one line per hit. Written to a temporary file and
/// renamed so a crash never leaves a half-written checkpoint behind.
inline void write_checkpoint(const std::filesystem::path& path, const Checkpoint& c)
{
    const auto tmp = std::filesystem::path(path.string() + ".tmp");
    {
        std::ofstream f(tmp, std::ios::trunc);
        if (!f)
            throw std::runtime_error("cannot write checkpoint " + tmp.string());
        f << json{{"type", "header"},       {"format", "sextic-scan-checkpoint"},
                  {"version", c.version},   {"kind", scan::to_string(c.kind)},
                  {"lo", c.lo},             {"hi", c.hi},
                  {"prefilter_primes", c.prefilter_primes}}
                 .dump()
          << '\n';
        f << json{{"type", "progress"},
                  {"last_row", c.last_row},
                  {"pairs", std::to_string(c.pairs)},
                  {"classified", std::to_string(c.classified)},
                  {"hits", c.hits.size()}}
                 .dump()
          << '\n';
        for (const auto& h : c.hits) {
            json j = hit_json(c.kind, h);
            j["type"] = "hit";
            f << j.dump() << '\n';
        }
        f.flush();
        if (!f)
            throw std::runtime_error("cannot write checkpoint " + tmp.string());
    }
    std::filesystem::rename(tmp, path);
}

inline resolvent::DecompositionType dt_from_json(const json& a)
{
    resolvent::DecompositionType d;
    int total = 0;
    for (const auto& p : a) {
        const int v = p.get<int>();
        if (v < 1 || v > 6)
            throw CheckpointError("bad decomposition type");
        d.parts.push_back(v);
        total += v;
    }
    if (total != 6 || !std::is_sorted(d.parts.rbegin(), d.parts.rend()))
        throw CheckpointError("bad decomposition type");
    return d;
}

inline std::uint64_t parse_count(const json& v)
{
    const std::string s = v.get<std::string>();
    if (s.empty() || s.size() > 19 || s.find_first_not_of("0123456789") != std::string::npos)
        throw CheckpointError("bad counter '" + s + "'");
    return std::stoull(s);
}

/// Reads and validates a checkpoint; any defect raises CheckpointError.
inline Checkpoint read_checkpoint(const std::filesystem::path& path)
{
    std::ifstream f(path);
    if (!f)
        throw CheckpointError("cannot open checkpoint " + path.string());
    Checkpoint c;
    try {
        std::string line;
        if (!std::getline(f, line))
            throw CheckpointError("empty checkpoint");
        const json h = json::parse(line);
        if (h.at("type") != "header" || h.at("format") != "sextic-scan-checkpoint")
            throw CheckpointError("missing header");
        c.version = h.at("version").get<std::string>();
        const std::string kind = h.at("kind").get<std::string>();
        if (kind != "cubic" && kind != "sextic")
            throw CheckpointError("unknown scan kind '" + kind + "'");
        c.kind = kind == "cubic" ? scan::ScanKind::Cubic : scan::ScanKind::Sextic;
        c.lo = h.at("lo").get<long>();
        c.hi = h.at("hi").get<long>();
        c.prefilter_primes = h.at("prefilter_primes").get<int>();

        if (!std::getline(f, line))
            throw CheckpointError("missing progress record");
        const json p = json::parse(line);
        if (p.at("type") != "progress")
            throw CheckpointError("missing progress record");
        c.last_row = p.at("last_row").get<long>();
        c.pairs = parse_count(p.at("pairs"));
        c.classified = parse_count(p.at("classified"));
        const auto expected_hits = p.at("hits").get<std::size_t>();
        if (c.last_row < c.lo - 1 || c.last_row > c.hi - 1 || c.classified > c.pairs)
            throw CheckpointError("progress record out of range");

        while (std::getline(f, line)) {
            const json j = json::parse(line);
            if (j.at("type") != "hit" || j.at("kind") != kind)
                throw CheckpointError("unexpected record");
            scan::ScanHit s{j.at("m").get<long>(), j.at("n").get<long>(), dt_from_json(j.at("dt1")),
                            dt_from_json(j.at("dt2")), j.at("degree").get<int>(),
                            j.at("compositum").get<std::string>()};
            if (s.m < c.lo || s.m > c.last_row || s.n <= s.m || s.n > c.hi)
                throw CheckpointError("hit outside completed rows");
            if (!c.hits.empty() && !(c.hits.back() < s))
                throw CheckpointError("hits out of order");
            c.hits.push_back(std::move(s));
        }
        if (c.hits.size() != expected_hits)
            throw CheckpointError("hit count mismatch (truncated file?)");
    } catch (const nlohmann::json::exception& e) {
        throw CheckpointError(std::string("malformed checkpoint: ") + e.what());
    }
    return c;
}

inline std::string hit_text(scan::ScanKind kind, const scan::ScanHit& h)
{
    return std::string(scan::to_string(kind)) + " m=" + std::to_string(h.m) + " n=" + std::to_string(h.n) +
           " DT=" + resolvent::to_string(h.dt1) + "/" + resolvent::to_string(h.dt2) +
           " degree=" + std::to_string(h.degree) + " " + h.compositum;
}

inline std::optional<std::string> cache_dir(const RunConfig& cfg)
{
    if (cfg.cache_dir)
        return cfg.cache_dir;
    if (const char* env = std::getenv("CACHE_DIR"); env && *env)
        return std::string(env);
    return std::nullopt;
}

/// Expected hits when the embedded data covers the range; the sextic list is
/// empty on every range.
inline std::optional<std::vector<std::pair<long, long>>> expected_hits(scan::ScanKind kind, const Range& r)
{
    if (kind == scan::ScanKind::Sextic)
        return std::vector<std::pair<long, long>>{};
    const auto known = golden::load_cubic_pairs();
    if (r.lo < known.verified_lo || r.hi > known.verified_hi)
        return std::nullopt;
    return known.within(r.lo, r.hi);
}

inline int cmd_scan(scan::ScanKind kind, const RunConfig& cfg, Output& out)
{
    const Range r = need(cfg.range, "range");
    if (r.lo < -1000000 || r.hi > 1000000)
        throw UsageError("--range must lie within [-1000000, 1000000]");
    if (cfg.checkpoint_interval < 1)
        throw UsageError("--checkpoint-interval must be >= 1");

    Checkpoint state;
    state.kind = kind;
    state.lo = r.lo;
    state.hi = r.hi;
    state.last_row = r.lo - 1;

    std::optional<std::filesystem::path> ckpt;
    if (const auto dir = cache_dir(cfg)) {
        std::filesystem::create_directories(*dir);
        ckpt = checkpoint_path(*dir, kind, r);
        if (std::filesystem::exists(*ckpt)) {
            Checkpoint old = read_checkpoint(*ckpt);
            if (!old.same_scan(state))
                throw UsageError("checkpoint " + ckpt->string() + " belongs to a different scan (" + old.version +
                                 " " + scan::to_string(old.kind) + " " + std::to_string(old.lo) + ".." +
                                 std::to_string(old.hi) + "); remove it to start over");
            state = std::move(old);
        }
    }

    for (const auto& h : state.hits)
        out.record(hit_json(kind, h), hit_text(kind, h));

    scan::ScanOptions opt;
    opt.lo = r.lo;
    opt.hi = r.hi;
    opt.jobs = cfg.jobs;
    opt.start_row = state.last_row + 1;
    opt.prefilter_primes = state.prefilter_primes;
    if (cfg.stop_after_rows)
        opt.stop_row = state.last_row + *cfg.stop_after_rows;

    long since_write = 0;
    if (opt.start_row <= r.hi - 1 && opt.start_row <= opt.stop_row) {
        opt.on_row = [&](const scan::ScanRow& row) {
            for (const auto& h : row.hits) {
                out.record(hit_json(kind, h), hit_text(kind, h));
                state.hits.push_back(h);
            }
            state.last_row = row.m;
            state.pairs += row.pairs;
            state.classified += row.classified;
            if (ckpt && ++since_write >= cfg.checkpoint_interval) {
                since_write = 0;
                out.flush();
                write_checkpoint(*ckpt, state);
            }
        };
        scan::run_scan(kind, opt);
    }
    if (ckpt)
        write_checkpoint(*ckpt, state);

    const bool complete = state.last_row >= r.hi - 1;
    json summary{{"kind", "scan_summary"},
                 {"scan", scan::to_string(kind)},
                 {"lo", r.lo},
                 {"hi", r.hi},
                 {"pairs", std::to_string(state.pairs)},
                 {"classified", std::to_string(state.classified)},
                 {"hits", state.hits.size()},
                 {"complete", complete}};
    std::string text = std::string(scan::to_string(kind)) + " scan " + std::to_string(r.lo) + ".." +
                       std::to_string(r.hi) + ": " + std::to_string(state.hits.size()) + " pairs found, " +
                       std::to_string(state.pairs) + " pairs scanned, " + std::to_string(state.classified) +
                       " classified";
    int code = kPass;
    std::optional<std::vector<std::pair<long, long>>> expected;
    if (complete)
        expected = expected_hits(kind, r);
    if (expected) {
        std::vector<std::pair<long, long>> got;
        for (const auto& h : state.hits)
            got.emplace_back(h.m, h.n);
        const bool match = got == *expected;
        summary["expected_match"] = match;
        text += match ? "; matches the known list" : "; DIFFERS from the known list";
        if (!match)
            code = kViolation;
    } else {
        summary["expected_match"] = nullptr;
        if (!complete)
            text += " (incomplete)";
    }
    out.record(summary, text);
    return code;
}

// ---------------------------------------------------------------------------
// verify

struct SuiteOptions {
    long item_b_factor = -27;
    long m_lo = -50, m_hi = 50;
    int random_pairs = 20;
    unsigned seed = 20240601;
};

/// Family identities, Theta invariance, resolvent discriminants on random
/// pairs, resultant and Bezout data for each m, the H P + F Q identity and
/// the mod-3 congruences.
inline CheckReport identity_suite(const SuiteOptions& opt = {})
{
    CheckReport rep;
    rep.append(family::verify_family_identities({opt.item_b_factor}));
    for (auto item : resolvent::verify_theta().items) {
        item.id = "theta." + item.id;
        rep.items.push_back(std::move(item));
    }

    std::mt19937 rng(opt.seed);
    std::uniform_int_distribution<int> num(-60, 60), den(1, 12);
    int checked = 0;
    bool disc_ok = true;
    std::string disc_detail;
    while (checked < opt.random_pairs) {
        const Rat a = make_rat(num(rng), den(rng)), b = make_rat(num(rng), den(rng));
        if (a == b || a + b + 3 == 0)
            continue;
        ++checked;
        if (!resolvent::resolvent_disc_check(a, b)) {
            disc_ok = false;
            disc_detail += " (" + str(a) + "," + str(b) + ")";
        }
    }
    rep.add("disc", "resolvent discriminants on " + std::to_string(opt.random_pairs) + " random pairs", disc_ok,
            disc_detail);

    bool res_ok = true, bez_ok = true, hpq_ok = true;
    std::string res_d, bez_d, hpq_d;
    for (long m = opt.m_lo; m <= opt.m_hi; ++m) {
        if (!thue::resultant_check(Int(m))) {
            res_ok = false;
            res_d += " " + std::to_string(m);
        }
        const auto c = thue::bezout_routes(Int(m));
        if (!c.routes_agree || !c.identity_holds) {
            bez_ok = false;
            bez_d += " " + std::to_string(m);
        }
        if (!thue::hpq_homogeneous_check(Int(m))) {
            hpq_ok = false;
            hpq_d += " " + std::to_string(m);
        }
    }
    const std::string span = " for m in [" + std::to_string(opt.m_lo) + "," + std::to_string(opt.m_hi) + "]";
    rep.add("resultant", "Res(h, f6_m) = 3^6 (m^2+3m+9)^5" + span, res_ok, res_d.empty() ? "" : "m =" + res_d);
    rep.add("bezout", "p h + q f6_m = 27(m^2+3m+9), both constructions agree" + span, bez_ok,
            bez_d.empty() ? "" : "m =" + bez_d);
    rep.add("hpq", "H P + F Q = 27(m^2+3m+9) y^11" + span, hpq_ok, hpq_d.empty() ? "" : "m =" + hpq_d);

    for (auto item : thue::mod3_lemma_check().items) {
        item.id = "mod3." + item.id;
        rep.items.push_back(std::move(item));
    }
    return rep;
}

inline int report_checks(const std::string& suite, const CheckReport& rep, Output& out)
{
    long failed = 0;
    for (const auto& it : rep.items) {
        failed += !it.passed;
        json j{{"kind", "check"}, {"suite", suite}, {"id", it.id}, {"passed", it.passed},
               {"description", it.description}};
        if (!it.detail.empty())
            j["detail"] = it.detail;
        out.record(j, out.mark(it.passed) + " " + it.id + "  " + it.description +
                          (it.passed || it.detail.empty() ? "" : "  [" + it.detail + "]"));
    }
    const long n = static_cast<long>(rep.items.size());
    std::string text = std::to_string(n - failed) + "/" + std::to_string(n) + " " + suite + " checks pass";
    if (failed) {
        text += "; failed:";
        for (const auto& it : rep.items)
            if (!it.passed)
                text += " " + it.id;
    }
    out.record(json{{"kind", "check_summary"}, {"suite", suite}, {"passed", n - failed}, {"failed", failed}}, text);
    return failed ? kViolation : kPass;
}

inline int cmd_verify_identities(const RunConfig& cfg, Output& out)
{
    SuiteOptions opt;
    if (cfg.mutate) {
        if (*cfg.mutate != "b")
            throw UsageError("--mutate supports only item b");
        opt.item_b_factor = 27;
    }
    CheckReport rep = identity_suite(opt);
    for (auto item : family::verify_spot_values(golden::load_spot_values()).items) {
        item.id = "spot." + item.id;
        rep.items.push_back(std::move(item));
    }
    return report_checks("identities", rep, out);
}

inline int cmd_verify_table2(const RunConfig&, Output& out)
{
    return report_checks("table2", resolvent::reproduce_table2(golden::load_table2()), out);
}

// ---------------------------------------------------------------------------

/// Runs cfg.command, writing records to os; returns the exit code. Usage
/// problems surface as UsageError, checkpoint defects as CheckpointError.
inline int dispatch(const RunConfig& cfg, std::ostream& os)
{
    if (cfg.jobs < 1)
        throw UsageError("--jobs must be >= 1");
    Output out(os, cfg.format, cfg.color);
    const std::string& c = cfg.command;
    int code;
    if (c == "form eval")
        code = cmd_form_eval(cfg, out);
    else if (c == "poly factor")
        code = cmd_poly_factor(cfg, out);
    else if (c == "iso")
        code = cmd_iso(cfg, out);
    else if (c == "intersect")
        code = cmd_intersect(cfg, out);
    else if (c == "thue solve")
        code = cmd_thue_solve(cfg, out);
    else if (c == "thue verify")
        code = cmd_thue_verify(cfg, out);
    else if (c == "scan cubic")
        code = cmd_scan(scan::ScanKind::Cubic, cfg, out);
    else if (c == "scan sextic")
        code = cmd_scan(scan::ScanKind::Sextic, cfg, out);
    else if (c == "verify identities")
        code = cmd_verify_identities(cfg, out);
    else if (c == "verify table2")
        code = cmd_verify_table2(cfg, out);
    else
        throw UsageError("unknown command '" + c + "'");
    out.flush();
    return code;
}

} // namespace sextic::cli
