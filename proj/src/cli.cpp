#include "flattorus/cli.hpp"

#include "flattorus/counting.hpp"
#include "flattorus/veech.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <numeric>
#include <sstream>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace flattorus {

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInput = 2;
constexpr int kExitUnsupported = 3;
constexpr int kExitInconsistent = 4;

std::string fmt_double(double v, const char* spec = "%.12g") {
    char buf[64];
    std::snprintf(buf, sizeof(buf), spec, v);
    return buf;
}

struct CountConfig {
    std::string kind = "sc";
    std::string markings_path;
    std::vector<std::string> radii;
    std::string format = "csv";
    std::string out_path;
    std::uint64_t horizon = 10000;
    int threads = 0;
};

void apply_threads(int threads) {
#ifdef _OPENMP
    if (threads > 0) omp_set_num_threads(threads);
#else
    (void)threads;
#endif
}

std::vector<Rational> parse_radii(const CountConfig& cfg) {
    std::vector<Rational> out;
    for (const std::string& chunk : cfg.radii) {
        std::stringstream ss(chunk);
        std::string item;
        while (std::getline(ss, item, ',')) {
            if (item.empty()) continue;
            out.push_back(Rational::parse(item));
            if (out.back().is_negative()) throw std::invalid_argument("negative radius");
        }
    }
    if (out.empty()) throw std::invalid_argument("no radius given (use --radius or --radii)");
    return out;
}

// The horizon must clear 4 * max radius * point count whenever some pair of
// markings is treated as irrational, otherwise the emulation is meaningless
// inside the counting window.
void check_horizon(const Marking& m, const std::vector<Rational>& radii) {
    bool any_irrational = m.classes.size() > 1;
    if (!any_irrational) return;
    Rational max_r(0);
    for (const Rational& r : radii)
        if (r > max_r) max_r = r;
    Rational required = Rational(4) * max_r * Rational(BigInt(m.size()));
    if (!(Rational(BigInt(m.horizon)) > required))
        throw std::invalid_argument(
            "horizon violation: need horizon > 4 * max radius * marking count = " +
            required.str());
}

struct CountRow {
    Rational radius;
    std::uint64_t count;
    double ratio;
    std::optional<GrowthConstant> target;
};

void write_count_csv(std::ostream& os, const std::vector<CountRow>& rows) {
    os << "radius,count,ratio,target_inv_pi,target_pi,target_value,deviation\n";
    for (const CountRow& r : rows) {
        os << r.radius.str() << "," << r.count << "," << fmt_double(r.ratio) << ",";
        if (r.target) {
            double tv = r.target->value();
            os << r.target->coef_inv_pi.str() << "," << r.target->coef_pi.str() << ","
               << fmt_double(tv) << "," << fmt_double(tv != 0.0 ? (r.ratio - tv) / tv : 0.0);
        } else {
            os << ",,,";
        }
        os << "\n";
    }
}

nlohmann::json count_row_json(const CountRow& r) {
    nlohmann::json j;
    j["radius"] = r.radius.str();
    j["count"] = r.count;
    j["ratio"] = fmt_double(r.ratio);
    if (r.target) {
        double tv = r.target->value();
        j["target_inv_pi"] = r.target->coef_inv_pi.str();
        j["target_pi"] = r.target->coef_pi.str();
        j["target_value"] = fmt_double(tv);
        j["deviation"] = fmt_double(tv != 0.0 ? (r.ratio - tv) / tv : 0.0);
    }
    return j;
}

int emit(const std::string& out_path, std::ostream& out, const std::string& text,
         std::ostream& err) {
    if (out_path.empty()) {
        out << text;
        return kExitOk;
    }
    std::ofstream f(out_path, std::ios::binary);
    if (!f) {
        err << "cannot write " << out_path << "\n";
        return kExitInput;
    }
    f << text;
    return kExitOk;
}

int cmd_count(const CountConfig& cfg, std::ostream& out, std::ostream& err) {
    apply_threads(cfg.threads);
    Marking m = Marking::from_file(cfg.markings_path, cfg.horizon);
    std::vector<Rational> radii = parse_radii(cfg);
    check_horizon(m, radii);
    CountKind kind = cfg.kind == "po" ? CountKind::po : CountKind::sc;
    std::vector<CountRow> rows;
    for (const Rational& r : radii) {
        CountReport rep = kind == CountKind::sc ? count_sc(m, r) : count_po(m, r);
        rows.push_back(CountRow{rep.radius, rep.count, rep.ratio, rep.target});
    }
    std::ostringstream text;
    if (cfg.format == "json") {
        nlohmann::json j;
        j["command"] = "count";
        j["config"] = {{"kind", cfg.kind},
                       {"markings", cfg.markings_path},
                       {"horizon", cfg.horizon},
                       {"threads", cfg.threads},
                       {"format", cfg.format}};
        j["rows"] = nlohmann::json::array();
        for (const CountRow& r : rows) j["rows"].push_back(count_row_json(r));
        text << j.dump(2) << "\n";
    } else {
        write_count_csv(text, rows);
    }
    return emit(cfg.out_path, out, text.str(), err);
}

int cmd_constant(const CountConfig& cfg, const std::string& probe, std::ostream& out,
                 std::ostream& err) {
    Marking m = Marking::from_file(cfg.markings_path, cfg.horizon);
    CountKind kind = cfg.kind == "po" ? CountKind::po : CountKind::sc;
    std::optional<GrowthConstant> c = closed_form_target(m, kind, Rational::parse(probe));
    if (!c) {
        err << "no closed form implemented for this marking; use the count command\n";
        return kExitUnsupported;
    }
    out << c->str() << " ~= " << fmt_double(c->value(), "%.12f") << "\n";
    return kExitOk;
}

int cmd_sweep(const std::string& kind, std::uint64_t nmin, std::uint64_t nmax,
              const std::string& format, const std::string& out_path, std::ostream& out,
              std::ostream& err) {
    std::ostringstream text;
    struct Row {
        std::uint64_t n;
        std::uint64_t p1, p2;
        GrowthConstant c;
    };
    std::vector<Row> rows;
    for (std::uint64_t n = std::max<std::uint64_t>(nmin, 2); n <= nmax; ++n) {
        // The constant depends only on the denominator; reuse it per n.
        GrowthConstant cn = kind == "po"
                                ? po_constant_two_marked_n(n)
                                : sc_constant_two_marked(n, 1, 0);
        for (std::uint64_t p1 = 0; p1 < n; ++p1)
            for (std::uint64_t p2 = 0; p2 < n; ++p2) {
                if (p1 == 0 && p2 == 0) continue;
                if (std::gcd(std::gcd(p1, p2), n) != 1) continue;
                rows.push_back(Row{n, p1, p2, cn});
            }
    }
    if (format == "json") {
        nlohmann::json j;
        j["command"] = "sweep";
        j["config"] = {{"kind", kind}, {"nmin", nmin}, {"nmax", nmax}, {"format", format}};
        j["rows"] = nlohmann::json::array();
        for (const Row& r : rows) {
            j["rows"].push_back({{"n", r.n},
                                 {"p1", r.p1},
                                 {"p2", r.p2},
                                 {"coef_inv_pi", r.c.coef_inv_pi.str()},
                                 {"coef_pi", r.c.coef_pi.str()},
                                 {"value", fmt_double(r.c.value())}});
        }
        text << j.dump(2) << "\n";
    } else {
        text << "n,p1,p2,coef_inv_pi,coef_pi,value\n";
        for (const Row& r : rows)
            text << r.n << "," << r.p1 << "," << r.p2 << "," << r.c.coef_inv_pi.str() << ","
                 << r.c.coef_pi.str() << "," << fmt_double(r.c.value()) << "\n";
    }
    return emit(out_path, out, text.str(), err);
}

IntegerMatrix2 parse_matrix(const std::string& text) {
    std::stringstream ss(text);
    std::string item;
    std::vector<long long> vals;
    while (std::getline(ss, item, ',')) vals.push_back(std::stoll(item));
    if (vals.size() != 4) throw std::invalid_argument("matrix needs four entries a,b,c,d");
    return IntegerMatrix2{vals[0], vals[1], vals[2], vals[3]};
}

RationalMarking2 parse_point(const std::string& text) {
    auto comma = text.find(',');
    if (comma == std::string::npos) throw std::invalid_argument("point needs two coordinates");
    Rational x = Rational::parse(text.substr(0, comma));
    Rational y = Rational::parse(text.substr(comma + 1));
    return RationalMarking2::from_point(PlanarVector(x, y));
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact counting of saddle connections and periodic cylinders on marked flat "
                 "tori, with closed-form growth constants and Veech-group computations"};
    app.require_subcommand(1);

    CountConfig count_cfg;
    CLI::App* count = app.add_subcommand("count", "Count saddle connections or cylinders");
    count->add_option("--kind", count_cfg.kind)->check(CLI::IsMember({"sc", "po"}));
    count->add_option("--markings", count_cfg.markings_path)->required();
    count->add_option("--radius", count_cfg.radii, "Radius (rational, e.g. 3/2)");
    count->add_option("--radii", count_cfg.radii, "Comma-separated radii");
    count->add_option("--format", count_cfg.format)->check(CLI::IsMember({"csv", "json"}));
    count->add_option("--out", count_cfg.out_path);
    count->add_option("--horizon", count_cfg.horizon);
    count->add_option("--threads", count_cfg.threads);

    CountConfig const_cfg;
    std::string probe = "30";
    CLI::App* constant = app.add_subcommand("constant", "Closed-form growth constant");
    constant->add_option("--kind", const_cfg.kind)->check(CLI::IsMember({"sc", "po"}));
    constant->add_option("--markings", const_cfg.markings_path)->required();
    constant->add_option("--horizon", const_cfg.horizon);
    constant->add_option("--probe-radius", probe,
                         "Division-event probe radius for general-position detection");

    std::string sweep_kind = "sc", sweep_format = "csv", sweep_out;
    std::uint64_t nmin = 2, nmax = 2;
    CLI::App* sweep = app.add_subcommand("sweep", "Constants over a denominator range");
    sweep->add_option("--kind", sweep_kind)->check(CLI::IsMember({"sc", "po"}));
    sweep->add_option("--nmin", nmin)->required();
    sweep->add_option("--nmax", nmax)->required();
    sweep->add_option("--format", sweep_format)->check(CLI::IsMember({"csv", "json"}));
    sweep->add_option("--out", sweep_out);

    CLI::App* veech = app.add_subcommand("veech", "Veech group computations");
    veech->require_subcommand(1);
    std::string point_text, matrix_text;
    CLI::App* membership = veech->add_subcommand("membership", "Test both membership predicates");
    membership->add_option("--point", point_text)->required();
    membership->add_option("--matrix", matrix_text, "a,b,c,d")->required();
    std::uint64_t veech_n = 2;
    CLI::App* vindex = veech->add_subcommand("index", "Subgroup index, both routes");
    vindex->add_option("--n", veech_n)->required();
    std::uint64_t cusps_n = 2;
    CLI::App* vcusps = veech->add_subcommand("cusps", "Cusp count");
    vcusps->add_option("--n", cusps_n)->required();
    long long red_p = 0, red_q = 0;
    std::uint64_t red_n = 2;
    CLI::App* vreduce = veech->add_subcommand("reduce", "Canonical reduction matrix");
    vreduce->add_option("--p", red_p)->required();
    vreduce->add_option("--q", red_q)->required();
    vreduce->add_option("--n", red_n)->required();

    std::vector<std::string> argv_copy(args);
    try {
        std::vector<const char*> argv;
        argv.push_back("flattorus");
        for (const std::string& a : argv_copy) argv.push_back(a.c_str());
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            // --help and friends.
            std::ostringstream help;
            int code = app.exit(e, help, help);
            out << help.str();
            return code;
        }
        err << e.what() << "\n";
        return kExitInput;
    }

    try {
        if (count->parsed()) return cmd_count(count_cfg, out, err);
        if (constant->parsed()) return cmd_constant(const_cfg, probe, out, err);
        if (sweep->parsed())
            return cmd_sweep(sweep_kind, nmin, nmax, sweep_format, sweep_out, out, err);
        if (membership->parsed()) {
            RationalMarking2 x = parse_point(point_text);
            IntegerMatrix2 M = parse_matrix(matrix_text);
            bool cong = membership_congruence(x, M);
            bool stab = membership_stabilizer(x, M);
            out << "congruence=" << (cong ? "true" : "false")
                << " stabilizer=" << (stab ? "true" : "false") << "\n";
            if (cong != stab) {
                err << "predicate disagreement\n";
                return kExitInconsistent;
            }
            return kExitOk;
        }
        if (vindex->parsed()) {
            std::uint64_t formula = veech_group_index(veech_n);
            std::uint64_t asym = index_via_asymptotics(veech_n);
            out << "pair orbit count = " << orbit_index(veech_n) << "\n";
            out << "index = " << formula << " (formula), " << asym << " (asymptotic route)\n";
            if (formula != asym) {
                err << "index routes disagree\n";
                return kExitInconsistent;
            }
            return kExitOk;
        }
        if (vcusps->parsed()) {
            out << "cusps = " << cusp_count(cusps_n) << "\n";
            return kExitOk;
        }
        if (vreduce->parsed()) {
            IntegerMatrix2 A = reduce_to_canonical(red_p, red_q, red_n);
            out << "A = [[" << A.a << "," << A.b << "],[" << A.c << "," << A.d << "]]\n";
            out << "A*(" << red_p << "/" << red_n << ", " << red_q << "/" << red_n << ") == (1/"
                << red_n << ", 0) mod Z^2: verified\n";
            return kExitOk;
        }
    } catch (const MarkingParseError& e) {
        err << e.what() << "\n";
        return kExitInput;
    } catch (const UnsupportedRegime& e) {
        err << e.what() << "\n";
        return kExitUnsupported;
    } catch (const ConsistencyError& e) {
        err << e.what() << "\n";
        return kExitInconsistent;
    } catch (const std::exception& e) {
        err << e.what() << "\n";
        return kExitInput;
    }
    return kExitInput;
}

}  // namespace flattorus
