#pragma once

#include <string>
#include <vector>

#include "tdeform/nc_algebra.hpp"

namespace tdeform {

struct CheckItem {
    std::string id;
    std::string anchor;
    Verdict verdict = Verdict::INDETERMINATE;
    double seconds = 0;
    std::string detail;
    std::vector<std::string> trace;
    double numeric_diff = -1;  ///< max |lhs - rhs| from the numeric oracle, -1 if not run
};

struct CheckReport {
    std::string suite;
    std::vector<CheckItem> items;

    void add(CheckItem it) { items.push_back(std::move(it)); }
    void add(std::string id, std::string anchor, Verdict v, std::string detail = "");
    void merge(const CheckReport& o);
    void sort_items();
    std::size_t count(Verdict v) const;
    bool all_equal() const { return count(Verdict::EQUAL) == items.size(); }
    std::string summary() const;
};

inline Verdict verdict_of(bool ok) { return ok ? Verdict::EQUAL : Verdict::INDETERMINATE; }

}  // namespace tdeform
