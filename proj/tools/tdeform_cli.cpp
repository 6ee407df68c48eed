// tdeform: run verification suites on catalog entries or presentation files.
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "tdeform/catalog.hpp"
#include "tdeform/suites.hpp"

using json = nlohmann::ordered_json;
using namespace tdeform;

namespace {

constexpr int kSchemaVersion = 1;

struct VerifyArgs {
    std::string entry, file;
    int n = 1;
    std::vector<std::string> suites;
    std::string numeric;
    bool trace = false;
    std::string trace_file = "tdeform-trace.json";
    std::string report = "text";
    unsigned jobs = 1;
    bool timing = false;
};

std::string diff_str(double d) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3e", d);
    return buf;
}

std::unique_ptr<CatalogEntry> open_entry(const std::string& entry, const std::string& file, int n) {
    if (!file.empty()) return load_entry_file(file);
    if (entry == "su2") return build_su2_bundle();
    if (entry == "so-theta") return build_so_theta(n);
    throw std::invalid_argument("unknown entry '" + entry + "' (known: su2, so-theta)");
}

json item_json(const CheckItem& it, bool timing) {
    json j = {{"id", it.id}, {"verdict", verdict_str(it.verdict)}, {"anchor", it.anchor}, {"detail", it.detail}};
    if (it.numeric_diff >= 0) j["numeric_diff"] = diff_str(it.numeric_diff);
    if (timing) j["seconds"] = it.seconds;
    return j;
}

void print_text(std::ostream& out, const std::string& label, const std::vector<CheckReport>& reps, bool timing) {
    std::size_t eq = 0, all = 0;
    out << "entry " << label << "\n";
    for (const auto& r : reps) {
        out << "\n[" << r.suite << "]\n";
        for (const auto& it : r.items) {
            out << "  " << verdict_str(it.verdict) << "  " << it.id << "  " << it.detail;
            if (it.numeric_diff >= 0) out << "  numeric " << diff_str(it.numeric_diff);
            if (timing) out << "  " << it.seconds << "s";
            out << "\n";
        }
        out << r.summary() << "\n";
        eq += r.count(Verdict::EQUAL);
        all += r.items.size();
    }
    out << "\ntotal: " << eq << "/" << all << " EQUAL\n";
}

int verify(const VerifyArgs& a) {
    if (a.entry.empty() == a.file.empty()) {
        std::cerr << "error: give exactly one of --entry and --file\n";
        return 2;
    }
    if (a.report != "text" && a.report != "json") {
        std::cerr << "error: --report must be text or json\n";
        return 2;
    }
    RunOptions o;
    o.jobs = std::max(1u, a.jobs);
    o.trace = a.trace;
    std::unique_ptr<CatalogEntry> e;
    try {
        if (!a.numeric.empty()) o.numeric = Rational(a.numeric);
        e = open_entry(a.entry, a.file, a.n);
    } catch (const std::exception& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return 2;
    }
    std::vector<Suite> suites;
    try {
        std::vector<std::string> names = a.suites.empty() ? list_suites(*e) : a.suites;
        for (const auto& s : names) suites.push_back(make_suite(*e, s));
    } catch (const std::exception& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return 2;
    }
    std::vector<CheckReport> reps;
    for (const auto& s : suites) reps.push_back(run_suite(*e, s, o));

    bool ok = true;
    for (const auto& r : reps) ok = ok && r.all_equal();
    const std::string label = a.file.empty() ? (e->family == "so-theta" ? a.entry + " n=" + std::to_string(a.n) : a.entry)
                                             : a.file;
    if (a.report == "json") {
        json j = {{"schema_version", kSchemaVersion}, {"entry", label}};
        j["numeric_oracle"] = a.numeric.empty() ? json(nullptr) : json(a.numeric);
        json arr = json::array();
        std::size_t eq = 0, all = 0;
        for (const auto& r : reps) {
            json items = json::array();
            for (const auto& it : r.items) items.push_back(item_json(it, a.timing));
            arr.push_back({{"suite", r.suite},
                           {"equal", r.count(Verdict::EQUAL)},
                           {"indeterminate", r.count(Verdict::INDETERMINATE)},
                           {"unequal_numeric", r.count(Verdict::UNEQUAL_NUMERIC)},
                           {"total", r.items.size()},
                           {"items", items}});
            eq += r.count(Verdict::EQUAL);
            all += r.items.size();
        }
        j["suites"] = arr;
        j["total"] = {{"equal", eq}, {"items", all}};
        j["exit_code"] = ok ? 0 : 1;
        std::cout << j.dump(2) << "\n";
    } else {
        print_text(std::cout, label, reps, a.timing);
    }

    if (a.trace) {
        json t = {{"schema_version", kSchemaVersion}, {"entry", label}};
        json traces = json::object();
        for (const auto& r : reps)
            for (const auto& it : r.items) traces[r.suite + "/" + it.id] = it.trace;
        t["traces"] = traces;
        std::ofstream out(a.trace_file);
        if (!out) {
            std::cerr << "error: cannot write " << a.trace_file << "\n";
            return 2;
        }
        out << t.dump(1) << "\n";
    }
    return ok ? 0 : 1;
}

int explain(const std::string& id, const std::string& trace_file) {
    std::ifstream in(trace_file);
    if (!in) {
        std::cerr << "error: no trace recorded (run verify --trace first; looked for " << trace_file << ")\n";
        return 2;
    }
    json t;
    try {
        t = json::parse(in);
    } catch (const std::exception& ex) {
        std::cerr << "error: unreadable trace file " << trace_file << ": " << ex.what() << "\n";
        return 2;
    }
    const json& traces = t.value("traces", json::object());
    std::vector<std::string> hits;
    if (traces.contains(id)) hits.push_back(id);
    else
        for (const auto& [k, v] : traces.items()) {
            auto slash = k.find('/');
            if (slash != std::string::npos && k.substr(slash + 1) == id) hits.push_back(k);
        }
    if (hits.empty()) {
        std::cerr << "error: no trace recorded for '" << id << "'\n";
        return 2;
    }
    if (hits.size() > 1) {
        std::cerr << "error: '" << id << "' is ambiguous; qualify it with the suite:\n";
        for (const auto& h : hits) std::cerr << "  " << h << "\n";
        return 2;
    }
    const json& lines = traces[hits[0]];
    std::cout << hits[0] << " (" << lines.size() << " steps)\n";
    if (lines.empty()) std::cout << "  (empty chain)\n";
    for (const auto& l : lines) std::cout << "  " << l.get<std::string>() << "\n";
    return 0;
}

int list(const std::string& entry, const std::string& file, int n) {
    try {
        if (file.empty()) {
            auto names = list_suites(entry);
            if (names.empty()) {
                std::cerr << "error: unknown entry '" << entry << "'\n";
                return 2;
            }
        }
        auto e = open_entry(entry, file, n);
        for (const auto& s : list_suites(*e)) std::cout << s << "  " << make_suite(*e, s).identities.size() << "\n";
        for (const auto& note : e->notes) std::cout << "note: " << note << "\n";
    } catch (const std::exception& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return 2;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact verification of theta-deformed Hopf-Galois identities"};
    app.require_subcommand(1);

    VerifyArgs va;
    auto* v = app.add_subcommand("verify", "run check suites");
    v->add_option("--entry", va.entry, "catalog entry: su2 or so-theta");
    v->add_option("--file", va.file, "presentation file");
    v->add_option("--n", va.n, "rank for so-theta")->check(CLI::PositiveNumber);
    v->add_option("--suite", va.suites, "suite name (repeatable; default all)");
    v->add_option("--numeric-oracle", va.numeric, "also evaluate numerically at theta = p/q");
    v->add_flag("--trace", va.trace, "record reduction traces");
    v->add_option("--trace-file", va.trace_file, "where traces are stored")->capture_default_str();
    v->add_option("--report", va.report, "text or json")->capture_default_str();
    v->add_option("--jobs", va.jobs, "worker threads")->capture_default_str();
    v->add_flag("--timing", va.timing, "include elapsed seconds (output is then not reproducible)");

    std::string eid, tfile = "tdeform-trace.json";
    auto* x = app.add_subcommand("explain", "print the recorded trace of an identity");
    x->add_option("id", eid, "identity id, optionally prefixed with its suite")->required();
    x->add_option("--trace-file", tfile, "trace file written by verify --trace")->capture_default_str();

    std::string lentry, lfile;
    int ln = 1;
    auto* l = app.add_subcommand("list", "list suites of an entry");
    l->add_option("--entry", lentry, "catalog entry");
    l->add_option("--file", lfile, "presentation file");
    l->add_option("--n", ln, "rank for so-theta")->check(CLI::PositiveNumber);

    std::string xentry;
    int xn = 1;
    auto* ex = app.add_subcommand("export", "print the presentation file of a catalog entry");
    ex->add_option("--entry", xentry, "catalog entry")->required();
    ex->add_option("--n", xn, "rank for so-theta")->check(CLI::PositiveNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }
    if (*v) return verify(va);
    if (*x) return explain(eid, tfile);
    if (*l) return list(lentry, lfile, ln);
    if (*ex) {
        try {
            std::cout << export_entry(*open_entry(xentry, "", xn));
        } catch (const std::exception& e) {
            std::cerr << "error: " << e.what() << "\n";
            return 2;
        }
        return 0;
    }
    return 2;
}
