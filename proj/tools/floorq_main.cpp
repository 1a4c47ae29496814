// floorq — command-line front end for the a-floor quotient order library.
//
// Subcommands: check, interval, scaling, semigroup, sigma, moebius, survey,
// average. Exit codes: 0 success (and "relation holds" for check), 1 relation
// does not hold (check only), 2 usage error, 3 overflow.
//
// Numeric flags are strict: decimal digits only (leading zeros fine), no
// signs, no other characters. FLOORQ_MAX_X overrides the soft runtime caps.

#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "floorq/floorq.hpp"

using namespace floorq;
using ordered_json = nlohmann::ordered_json;

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

bool parse_u64_strict(const std::string& s, u64& out) {
    if (s.empty()) return false;
    out = 0;
    for (char c : s) {
        if (c < '0' || c > '9') return false;
        const u64 digit = static_cast<u64>(c - '0');
        if (out > (std::numeric_limits<u64>::max() - digit) / 10) return false;
        out = out * 10 + digit;
    }
    return true;
}

u64 need_u64(const std::string& s, const char* flag, u64 min_value = 1) {
    u64 v = 0;
    if (!parse_u64_strict(s, v))
        throw UsageError(std::string(flag) + " expects an unsigned decimal integer, got '" + s + "'");
    if (v < min_value)
        throw UsageError(std::string(flag) + " must be at least " + std::to_string(min_value));
    return v;
}

std::string fixed6(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.6f", v);
    return buf;
}

std::string join_u64(const std::vector<u64>& xs, char sep) {
    std::string out;
    for (size_t i = 0; i < xs.size(); ++i) {
        if (i) out.push_back(sep);
        out += std::to_string(xs[i]);
    }
    return out;
}

enum class Format { Plain, Csv, Json };

Format parse_format(const std::string& s, Format dflt) {
    if (s.empty()) return dflt;
    if (s == "plain") return Format::Plain;
    if (s == "csv") return Format::Csv;
    if (s == "json") return Format::Json;
    throw UsageError("--format expects plain, csv or json, got '" + s + "'");
}

// ---- check ----------------------------------------------------------------

int run_check(u64 a, u64 d, u64 n, bool explain, Format fmt) {
    const bool holds = is_a_floor_quotient(a, d, n);
    const auto six = characterization_suite(a, d, n);
    const auto ks = cutting_lengths(a, d, n);
    const char* names[6] = {"cutting", "covering", "intersection",
                            "strong_remainder", "tipping_point", "reciprocal_duality"};
    const bool verdicts[6] = {six.cutting, six.covering, six.intersection,
                              six.strong_remainder, six.tipping_point, six.reciprocal_duality};

    if (fmt == Format::Json) {
        ordered_json j{{"a", a}, {"d", d}, {"n", n}, {"holds", holds}};
        if (explain) {
            ordered_json c;
            for (int i = 0; i < 6; ++i) c[names[i]] = verdicts[i];
            j["characterizations"] = c;
            j["cutting_lengths"] = ks.empty()
                ? ordered_json(nullptr)
                : ordered_json{{"lo_exclusive", ks.lo_exclusive}, {"hi_inclusive", ks.hi_inclusive}};
        }
        std::cout << j.dump() << "\n";
    } else if (fmt == Format::Csv) {
        std::cout << "holds\n" << (holds ? "true" : "false") << "\n";
    } else {
        std::cout << (holds ? "true" : "false") << "\n";
        if (explain) {
            for (int i = 0; i < 6; ++i)
                std::cout << names[i] << ": " << (verdicts[i] ? "true" : "false") << "\n";
            if (ks.empty())
                std::cout << "cutting_lengths: empty\n";
            else
                std::cout << "cutting_lengths: (" << ks.lo_exclusive << ", " << ks.hi_inclusive << "]\n";
        }
    }
    return holds ? 0 : 1;
}

// ---- interval --------------------------------------------------------------

int run_interval(u64 a, u64 d, u64 n, bool relations, Format fmt) {
    const auto iv = interval(a, d, n);
    std::vector<std::pair<u64, u64>> pairs;
    if (relations)
        for (size_t i = 0; i < iv.size(); ++i)
            for (size_t j = i + 1; j < iv.size(); ++j)
                if (iv.leq(i, j)) pairs.emplace_back(iv.elements[i], iv.elements[j]);

    if (fmt == Format::Json) {
        ordered_json j{{"a", a}, {"d", d}, {"n", n}, {"elements", iv.elements}};
        if (relations) {
            auto arr = ordered_json::array();
            for (auto [x, y] : pairs) arr.push_back(ordered_json::array({x, y}));
            j["relations"] = arr;
        }
        std::cout << j.dump() << "\n";
    } else if (fmt == Format::Csv) {
        if (relations) {
            std::cout << "lo,hi\n";
            for (auto [x, y] : pairs) std::cout << x << "," << y << "\n";
        } else {
            std::cout << "element\n";
            for (u64 e : iv.elements) std::cout << e << "\n";
        }
    } else {
        std::cout << (iv.empty() ? "empty" : join_u64(iv.elements, ',')) << "\n";
        if (relations)
            for (auto [x, y] : pairs) std::cout << x << "<=" << y << "\n";
    }
    return 0;
}

// ---- scaling ---------------------------------------------------------------

int run_scaling(u64 d, u64 n, Format fmt) {
    const auto s = scaling_set(d, n);
    const char* kind = s.kind == ScalingKind::All ? "all"
                     : s.kind == ScalingKind::Initial ? "initial" : "empty";
    if (fmt == Format::Json) {
        ordered_json j{{"d", d}, {"n", n}, {"kind", kind}};
        j["bound"] = s.kind == ScalingKind::Initial ? ordered_json(s.bound) : ordered_json(nullptr);
        std::cout << j.dump() << "\n";
    } else if (fmt == Format::Csv) {
        std::cout << "kind,bound\n" << kind << ",";
        if (s.kind == ScalingKind::Initial) std::cout << s.bound;
        std::cout << "\n";
    } else {
        if (s.kind == ScalingKind::All) std::cout << "all\n";
        else if (s.kind == ScalingKind::Initial) std::cout << "1.." << s.bound << "\n";
        else std::cout << "empty\n";
    }
    return 0;
}

// ---- semigroup / sigma / moebius -------------------------------------------

int run_semigroup(u64 a, u64 d, Format fmt) {
    const auto sg = floor_multiple_semigroup(a, d);
    if (fmt == Format::Json) {
        ordered_json j{{"a", a}, {"d", d}, {"generators", sg.generators},
                       {"frobenius", sg.frobenius}, {"genus", sg.genus}};
        std::cout << j.dump() << "\n";
    } else if (fmt == Format::Csv) {
        std::cout << "generators,frobenius,genus\n"
                  << join_u64(sg.generators, ';') << "," << sg.frobenius << "," << sg.genus << "\n";
    } else {
        std::cout << "generators: " << join_u64(sg.generators, ',') << "\n"
                  << "frobenius: " << sg.frobenius << "\n"
                  << "genus: " << sg.genus << "\n";
    }
    return 0;
}

int run_sigma(u64 a, u64 d, u64 x, Format fmt) {
    const u64 v = sigma(a, d, x);
    if (fmt == Format::Json)
        std::cout << ordered_json{{"a", a}, {"d", d}, {"x", x}, {"sigma", v}}.dump() << "\n";
    else if (fmt == Format::Csv)
        std::cout << "sigma\n" << v << "\n";
    else
        std::cout << v << "\n";
    return 0;
}

int run_moebius(u64 a, u64 d, u64 n, Format fmt) {
    const i64 v = moebius_value(a, d, n);
    if (fmt == Format::Json)
        std::cout << ordered_json{{"a", a}, {"d", d}, {"n", n}, {"mu", v}}.dump() << "\n";
    else if (fmt == Format::Csv)
        std::cout << "mu\n" << v << "\n";
    else
        std::cout << v << "\n";
    return 0;
}

// ---- average ---------------------------------------------------------------

int run_average(u64 a, u64 x, u64 max_x, Format fmt) {
    const auto r = average_size_report(a, x, max_x);
    if (fmt == Format::Json) {
        std::cout << ordered_json{{"a", a}, {"x", x}, {"average", r.average},
                                  {"predicted", r.predicted}, {"relative_error", r.relative_error}}
                         .dump()
                  << "\n";
    } else if (fmt == Format::Csv) {
        std::cout << "average,predicted,relative_error\n"
                  << fixed6(r.average) << "," << fixed6(r.predicted) << ","
                  << fixed6(r.relative_error) << "\n";
    } else {
        std::cout << "average: " << fixed6(r.average) << "\n"
                  << "predicted: " << fixed6(r.predicted) << "\n"
                  << "relative_error: " << fixed6(r.relative_error) << "\n";
    }
    return 0;
}

// ---- survey ----------------------------------------------------------------

int run_survey(u64 a, u64 n_max, const SurveyOptions& opt, Format fmt) {
    const auto rows = survey(a, n_max, opt);

    std::vector<std::string> cols{"n"};
    if (opt.sizes) { cols.push_back("size_minus"); cols.push_back("size_plus"); cols.push_back("size_total"); }
    if (opt.thresholds) { cols.push_back("set_threshold"); cols.push_back("poset_threshold"); }
    if (opt.simulate) { cols.push_back("sim_minus"); cols.push_back("sim_plus"); }

    auto field = [&](const SurveyRow& r, const std::string& c) -> u64 {
        if (c == "n") return r.n;
        if (c == "size_minus") return r.size_minus;
        if (c == "size_plus") return r.size_plus;
        if (c == "size_total") return r.size_total;
        if (c == "set_threshold") return r.set_threshold;
        if (c == "poset_threshold") return r.poset_threshold;
        if (c == "sim_minus") return static_cast<u64>(r.sim_minus);
        return static_cast<u64>(r.sim_plus);
    };

    if (fmt == Format::Json) {
        auto arr = ordered_json::array();
        for (const auto& r : rows) {
            ordered_json j;
            for (const auto& c : cols) j[c] = field(r, c);
            arr.push_back(std::move(j));
        }
        std::cout << arr.dump() << "\n";
    } else {
        std::string out;
        for (size_t i = 0; i < cols.size(); ++i) {
            if (i) out.push_back(',');
            out += cols[i];
        }
        out.push_back('\n');
        for (const auto& r : rows) {
            for (size_t i = 0; i < cols.size(); ++i) {
                if (i) out.push_back(',');
                out += std::to_string(field(r, cols[i]));
            }
            out.push_back('\n');
        }
        std::cout << out;
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"a-floor quotient partial orders: queries, tables and survey data"};
    app.require_subcommand(1);

    std::string a_s, d_s, n_s, x_s, nmax_s, jobs_s, seed_s, columns_s, format_s;
    bool explain = false, relations = false, thresholds_flag = false;

    auto add_a = [&](CLI::App* c) { c->add_option("-a", a_s, "dilation parameter a")->required(); };
    auto add_d = [&](CLI::App* c) { c->add_option("-d", d_s, "candidate quotient d")->required(); };
    auto add_n = [&](CLI::App* c) { c->add_option("-n", n_s, "target n")->required(); };
    auto add_fmt = [&](CLI::App* c) { c->add_option("--format", format_s, "plain, csv or json"); };

    auto* c_check = app.add_subcommand("check", "decide whether d is an a-floor quotient of n");
    add_a(c_check); add_d(c_check); add_n(c_check); add_fmt(c_check);
    c_check->add_flag("--explain", explain, "print all six characterization verdicts and the cutting-length range");

    auto* c_interval = app.add_subcommand("interval", "list the order interval Q_a[d,n]");
    add_a(c_interval); add_d(c_interval); add_n(c_interval); add_fmt(c_interval);
    c_interval->add_flag("--relations", relations, "also print the incidence pairs");

    auto* c_scaling = app.add_subcommand("scaling", "the set of a with d <=_a n");
    add_d(c_scaling); add_n(c_scaling); add_fmt(c_scaling);

    auto* c_semigroup = app.add_subcommand("semigroup", "generators, Frobenius number and genus of M_a(d)");
    add_a(c_semigroup); add_d(c_semigroup); add_fmt(c_semigroup);

    auto* c_sigma = app.add_subcommand("sigma", "count a-floor multiples of d up to x");
    add_a(c_sigma); add_d(c_sigma); add_fmt(c_sigma);
    c_sigma->add_option("-x", x_s, "upper bound x")->required();

    auto* c_moebius = app.add_subcommand("moebius", "Moebius function mu_a(d,n)");
    add_a(c_moebius); add_d(c_moebius); add_n(c_moebius); add_fmt(c_moebius);

    auto* c_survey = app.add_subcommand("survey", "per-n sizes and stabilization thresholds as CSV/JSON");
    c_survey->add_option("-a", a_s, "dilation parameter a (default 1)");
    c_survey->add_option("-N,--n-max", nmax_s, "largest n to emit")->required();
    c_survey->add_option("--columns", columns_s, "all, sizes or thresholds");
    c_survey->add_flag("--thresholds", thresholds_flag, "shorthand for --columns thresholds");
    c_survey->add_option("--jobs", jobs_s, "worker count (output is identical for any value)");
    c_survey->add_option("--simulate-seed", seed_s, "append seeded random-acceptance model columns");
    add_fmt(c_survey);

    auto* c_average = app.add_subcommand("average", "average interval size vs (4/3)sqrt(x/a)");
    c_average->add_option("-a", a_s, "dilation parameter a")->required();
    c_average->add_option("-x", x_s, "range bound x")->required();
    add_fmt(c_average);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    }

    try {
        u64 max_x_override = 0;
        if (const char* env = std::getenv("FLOORQ_MAX_X")) {
            if (!parse_u64_strict(env, max_x_override) || max_x_override == 0)
                throw UsageError(std::string("FLOORQ_MAX_X must be a positive integer, got '") + env + "'");
        }
        const u64 cap_x = max_x_override ? max_x_override : kDefaultMaxX;
        const u64 cap_n = max_x_override ? max_x_override : kDefaultMaxSurveyN;

        const Format fmt = parse_format(format_s, c_survey->parsed() ? Format::Csv : Format::Plain);

        if (c_check->parsed())
            return run_check(need_u64(a_s, "-a"), need_u64(d_s, "-d"), need_u64(n_s, "-n"), explain, fmt);
        if (c_interval->parsed())
            return run_interval(need_u64(a_s, "-a"), need_u64(d_s, "-d"), need_u64(n_s, "-n"), relations, fmt);
        if (c_scaling->parsed())
            return run_scaling(need_u64(d_s, "-d"), need_u64(n_s, "-n"), fmt);
        if (c_semigroup->parsed())
            return run_semigroup(need_u64(a_s, "-a"), need_u64(d_s, "-d"), fmt);
        if (c_sigma->parsed())
            return run_sigma(need_u64(a_s, "-a"), need_u64(d_s, "-d"), need_u64(x_s, "-x", 0), fmt);
        if (c_moebius->parsed())
            return run_moebius(need_u64(a_s, "-a"), need_u64(d_s, "-d"), need_u64(n_s, "-n"), fmt);
        if (c_average->parsed())
            return run_average(need_u64(a_s, "-a"), need_u64(x_s, "-x"), cap_x, fmt);
        if (c_survey->parsed()) {
            SurveyOptions opt;
            opt.max_n = cap_n;
            std::string cols = columns_s.empty() ? "all" : columns_s;
            if (thresholds_flag) cols = "thresholds";
            if (cols == "sizes") opt.thresholds = false;
            else if (cols == "thresholds") opt.sizes = false;
            else if (cols != "all") throw UsageError("--columns expects all, sizes or thresholds, got '" + cols + "'");
            if (!jobs_s.empty()) {
                const u64 jobs = need_u64(jobs_s, "--jobs");
                if (jobs > 1024) throw UsageError("--jobs must be at most 1024");
                opt.jobs = static_cast<unsigned>(jobs);
            }
            if (!seed_s.empty()) {
                opt.simulate = true;
                opt.seed = need_u64(seed_s, "--simulate-seed", 0);
            }
            const u64 a = a_s.empty() ? 1 : need_u64(a_s, "-a");
            return run_survey(a, need_u64(nmax_s, "-N"), opt, fmt);
        }
        return 2;   // unreachable: require_subcommand(1)
    } catch (const std::overflow_error& e) {
        std::cerr << "overflow: " << e.what() << "\n";
        return 3;
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
