#pragma once

#include <algorithm>
#include <string>
#include <vector>

namespace sextic {

/// One named pass/fail line of a verification run.
struct CheckItem {
    std::string id;
    std::string description;
    bool passed = false;
    std::string detail; // witness point or mismatch on failure
};

struct CheckReport {
    std::vector<CheckItem> items;

    void add(std::string id, std::string description, bool passed, std::string detail = {})
    {
        items.push_back({std::move(id), std::move(description), passed, std::move(detail)});
    }
    void append(const CheckReport& other)
    {
        items.insert(items.end(), other.items.begin(), other.items.end());
    }
    bool all_passed() const
    {
        return std::all_of(items.begin(), items.end(), [](const CheckItem& i) { return i.passed; });
    }
    const CheckItem* find(const std::string& id) const
    {
        for (const auto& i : items)
            if (i.id == id)
                return &i;
        return nullptr;
    }
};

} // namespace sextic
