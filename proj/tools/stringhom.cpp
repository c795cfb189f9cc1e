// Command-line surface: differential evaluation, homology tables over
// truncation windows, and the verification suites.
//
// Exit codes: 0 success / all checks pass, 1 verification failure,
// 2 usage or parse error.

#include <atomic>
#include <iostream>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "stringhom/homology.hpp"
#include "stringhom/parse.hpp"
#include "stringhom/verify.hpp"

namespace {

using namespace stringhom;
using ordered_json = nlohmann::ordered_json;

std::optional<Cx> complex_from(const std::string& s) {
    if (s == "f00") return Cx::F00;
    if (s == "f11") return Cx::F11;
    if (s == "f02") return Cx::F02;
    if (s == "f22") return Cx::F22;
    return std::nullopt;
}

// "P", "P/2" or "A..B" (inclusive range stepping by 1, or by 1/2 steps when
// an endpoint is a half).
struct HalfRange {
    HalfInt lo, hi;
    bool is_range = false;
};

long parse_long(const std::string& s) {
    try {
        std::size_t used = 0;
        long v = std::stol(s, &used);
        if (used != s.size()) throw std::invalid_argument("");
        return v;
    } catch (const std::exception&) {
        throw std::invalid_argument("not an integer: '" + s + "'");
    }
}

HalfInt parse_half(const std::string& s) {
    std::size_t slash = s.find('/');
    if (slash == std::string::npos) return HalfInt::whole(parse_long(s));
    if (s.substr(slash + 1) != "2") throw std::invalid_argument("only halves are supported: " + s);
    return HalfInt::halves(parse_long(s.substr(0, slash)));
}

HalfRange parse_half_range(const std::string& s) {
    std::size_t dots = s.find("..");
    if (dots == std::string::npos) {
        HalfInt v = parse_half(s);
        return {v, v, false};
    }
    HalfRange r{parse_half(s.substr(0, dots)), parse_half(s.substr(dots + 2)), true};
    if (r.hi < r.lo) throw std::invalid_argument("empty range: " + s);
    return r;
}

std::vector<HalfInt> expand(const HalfRange& r) {
    std::vector<HalfInt> out;
    // Step by whole units; parity follows the endpoints.
    for (HalfInt v = r.lo; v <= r.hi; v += HalfInt::whole(1)) out.push_back(v);
    return out;
}

ordered_json half_json(HalfInt h) {
    if (h.is_whole()) return ordered_json(h.whole_value());
    return ordered_json(h.str());
}

struct Row {
    ScanRow scan;
    bool with_stable = false;
};

ordered_json row_json(const Row& row) {
    const auto& rep = row.scan.report;
    ordered_json j;
    j["complex"] = name(rep.spec.complex);
    if (rep.spec.summand) j["summand"] = name(*rep.spec.summand);
    if (rep.spec.max_a_degree) j["max_a_degree"] = half_json(*rep.spec.max_a_degree);
    j["winding"] = half_json(rep.spec.winding);
    j["max_weight"] = half_json(rep.spec.max_weight);
    j["dim_space"] = rep.dim_space;
    j["dim_kernel"] = rep.dim_kernel;
    j["dim_image"] = rep.dim_image;
    j["dim_homology"] = rep.dim_homology;
    j["predicted"] = rep.predicted ? ordered_json(*rep.predicted) : ordered_json(nullptr);
    if (row.with_stable) j["stable"] = row.scan.stable;
    return j;
}

void print_rows(const std::vector<Row>& rows, const std::string& format) {
    if (format == "json") {
        for (const auto& r : rows) std::cout << row_json(r).dump() << "\n";
        return;
    }
    if (format == "csv") {
        std::cout << "complex,summand,winding,max_weight,dim_space,dim_kernel,dim_image,"
                     "dim_homology,predicted,stable\n";
        for (const auto& r : rows) {
            const auto& rep = r.scan.report;
            std::cout << name(rep.spec.complex) << ','
                      << (rep.spec.summand ? name(*rep.spec.summand) : "") << ','
                      << rep.spec.winding.str() << ',' << rep.spec.max_weight.str() << ','
                      << rep.dim_space << ',' << rep.dim_kernel << ',' << rep.dim_image << ','
                      << rep.dim_homology << ','
                      << (rep.predicted ? std::to_string(*rep.predicted) : "") << ','
                      << (r.with_stable ? (r.scan.stable ? "true" : "false") : "") << "\n";
        }
        return;
    }
    for (const auto& r : rows) {
        const auto& rep = r.scan.report;
        std::cout << name(rep.spec.complex);
        if (rep.spec.summand) std::cout << " " << name(*rep.spec.summand);
        std::cout << "  w=" << rep.spec.winding.str() << "  M=" << rep.spec.max_weight.str()
                  << "  space=" << rep.dim_space << "  ker=" << rep.dim_kernel
                  << "  im=" << rep.dim_image << "  H=" << rep.dim_homology;
        if (rep.predicted) std::cout << "  predicted=" << *rep.predicted;
        if (r.with_stable) std::cout << (r.scan.stable ? "  [stable]" : "");
        std::cout << "\n";
    }
}

int run_homology(const std::string& cxs, const std::string& windings,
                 const std::string& weights, const std::string& summand,
                 const std::string& a_degree, const std::string& format, unsigned jobs) {
    auto cx = complex_from(cxs);
    if (!cx) {
        std::cerr << "error: unknown complex '" << cxs << "'\n";
        return 2;
    }
    TruncationSpec templ;
    templ.complex = *cx;
    if (!summand.empty()) {
        auto f = summand_filter_from(summand);
        if (!f) {
            std::cerr << "error: unknown summand '" << summand << "'\n";
            return 2;
        }
        templ.summand = f;
    }
    if (!a_degree.empty()) templ.max_a_degree = parse_half(a_degree);

    HalfRange wr = parse_half_range(windings);
    HalfRange mr = parse_half_range(weights);
    validate(TruncationSpec{templ.complex, wr.lo, mr.lo, templ.summand, templ.max_a_degree});

    struct Task {
        HalfInt winding;
        std::vector<HalfInt> weights;
    };
    std::vector<Task> tasks;
    for (HalfInt w : expand(wr)) tasks.push_back({w, expand(mr)});

    std::vector<std::vector<Row>> results(tasks.size());
    auto work = [&](std::size_t i) {
        TruncationSpec s = templ;
        s.winding = tasks[i].winding;
        auto rows = stabilization_scan(s, tasks[i].weights);
        for (auto& sr : rows) results[i].push_back({sr, mr.is_range});
    };
    if (jobs <= 1 || tasks.size() <= 1) {
        for (std::size_t i = 0; i < tasks.size(); ++i) work(i);
    } else {
        std::atomic<std::size_t> next{0};
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < std::min<std::size_t>(jobs, tasks.size()); ++t)
            pool.emplace_back([&] {
                for (std::size_t i = next.fetch_add(1); i < tasks.size(); i = next.fetch_add(1))
                    work(i);
            });
        for (auto& th : pool) th.join();
    }
    std::vector<Row> rows;
    for (auto& r : results) rows.insert(rows.end(), r.begin(), r.end());
    print_rows(rows, format);
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"String homology of marked annuli: differentials, homology windows, "
                 "verification suites"};
    app.require_subcommand(1);

    std::string cxs, expr, windings, weights = "0", summand, a_degree, format = "text", suite;
    unsigned jobs = 1;

    auto* cdiff = app.add_subcommand("diff", "differential of an element expression");
    cdiff->add_option("--complex", cxs, "f00|f11|f02|f22")->required();
    cdiff->add_option("--expr", expr, "element expression")->required();

    auto add_homology_opts = [&](CLI::App* c) {
        c->add_option("--complex", cxs, "f00|f11|f02|f22")->required();
        c->add_option("--winding", windings, "P, P/2 or A..B")->required();
        c->add_option("--max-weight", weights, "P, P/2 or A..B")->required();
        c->add_option("--summand", summand, "a+b+|a+b-|a-b+|a-b-|cd (f22), a+|a- (f02)");
        c->add_option("--max-a-degree", a_degree, "P/2 cap on positive a-subscripts");
        c->add_option("--format", format, "json|csv|text");
        c->add_option("--jobs", jobs, "parallel workers over windings");
    };
    add_homology_opts(app.add_subcommand("homology", "homology dimensions of windows"));
    add_homology_opts(app.add_subcommand("table", "alias of homology over ranges"));

    auto* cverify = app.add_subcommand("verify", "run a verification suite");
    std::string mw;
    cverify->add_option("--suite", suite, "d2|commutators|weyl|sources|chainmaps|"
                                          "standardforms|dims|nonvanishing|all")
        ->required();
    cverify->add_option("--max-weight", mw, "weight/grade bound where the suite takes one");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e); // --help
        app.exit(e);
        return 2;
    }

    try {
        if (cdiff->parsed()) {
            auto cx = complex_from(cxs);
            if (!cx) {
                std::cerr << "error: unknown complex '" << cxs << "'\n";
                return 2;
            }
            std::cout << to_string(diff(parse_element(expr, *cx))) << "\n";
            return 0;
        }
        if (cverify->parsed()) {
            std::optional<int> bound;
            if (!mw.empty()) bound = static_cast<int>(parse_half(mw).doubled() / 2);
            auto checks = run_suite(suite, bound);
            bool all = true;
            for (const auto& c : checks) {
                std::cout << (c.pass ? "PASS  " : "FAIL  ") << c.name;
                if (!c.detail.empty()) std::cout << "  (" << c.detail << ")";
                std::cout << "\n";
                all = all && c.pass;
            }
            std::cout << (all ? "all checks passed" : "some checks FAILED") << "\n";
            return all ? 0 : 1;
        }
        return run_homology(cxs, windings, weights, summand, a_degree, format, jobs);
    } catch (const ParseError& e) {
        std::cerr << "parse error " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
}
