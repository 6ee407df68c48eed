#include "tdeform/report.hpp"

#include <algorithm>

namespace tdeform {

void CheckReport::add(std::string id, std::string anchor, Verdict v, std::string detail) {
    CheckItem it;
    it.id = std::move(id);
    it.anchor = std::move(anchor);
    it.verdict = v;
    it.detail = std::move(detail);
    items.push_back(std::move(it));
}

void CheckReport::merge(const CheckReport& o) { items.insert(items.end(), o.items.begin(), o.items.end()); }

void CheckReport::sort_items() {
    std::stable_sort(items.begin(), items.end(), [](const CheckItem& a, const CheckItem& b) { return a.id < b.id; });
}

std::size_t CheckReport::count(Verdict v) const {
    return std::size_t(std::count_if(items.begin(), items.end(), [v](const CheckItem& i) { return i.verdict == v; }));
}

std::string CheckReport::summary() const {
    return suite + ": " + std::to_string(count(Verdict::EQUAL)) + "/" + std::to_string(items.size()) + " EQUAL, " +
           std::to_string(count(Verdict::INDETERMINATE)) + " INDETERMINATE, " +
           std::to_string(count(Verdict::UNEQUAL_NUMERIC)) + " UNEQUAL_NUMERIC";
}

}  // namespace tdeform
