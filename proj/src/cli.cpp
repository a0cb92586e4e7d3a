#include "cylpack/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "cylpack/bounds.hpp"
#include "cylpack/extremal.hpp"
#include "cylpack/json_io.hpp"
#include "cylpack/packing.hpp"
#include "cylpack/slice.hpp"
#include "cylpack/verify.hpp"

namespace cylpack {

namespace {

using json = nlohmann::ordered_json;

std::uint64_t default_seed() {
    if (const char* env = std::getenv("CYLPACK_SEED")) {
        char* end = nullptr;
        const unsigned long long v = std::strtoull(env, &end, 10);
        if (end && *end == '\0') return v;
    }
    return 42;
}

void write_or_print(const std::string& text, const std::string& path) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path);
    if (!out) throw FormatError("cannot open for writing: " + path);
    out << text;
}

int cmd_bound(double t, const std::string& shape) {
    const BoundResult b = (shape == "uncapped") ? uncapped_bound(t) : capped_bound(t);
    json j;
    j["t"] = t;
    j["shape"] = shape;
    j["bound"] = b.bound;
    j["raw"] = b.raw;
    j["trivial"] = b.trivial;
    j["rule_of_thumb"] = rule_of_thumb(t);
    j["conjectured"] = conjectured_density(t);
    std::cout << j.dump(2) << "\n";
    return 0;
}

std::string table_csv(const std::vector<TableRow>& rows, bool extended) {
    std::ostringstream out;
    out << "label,t,shape,bound,trivial,flagged";
    if (extended) out << ",rule_of_thumb,conjectured";
    out << "\r\n";
    out << std::setprecision(6) << std::fixed;
    for (const TableRow& r : rows) {
        out << csv_escape(r.label) << "," << std::setprecision(0) << r.t << std::setprecision(6)
            << "," << shape_name(r.shape) << "," << r.bound << ","
            << (r.trivial ? "true" : "false") << "," << (r.flagged ? "true" : "false");
        if (extended) out << "," << r.rule << "," << r.conjectured;
        out << "\r\n";
    }
    return out.str();
}

std::string table_json(const std::vector<TableRow>& rows, bool extended) {
    json arr = json::array();
    for (const TableRow& r : rows) {
        json j;
        j["label"] = r.label;
        j["t"] = r.t;
        j["shape"] = shape_name(r.shape);
        j["bound"] = r.bound;
        j["trivial"] = r.trivial;
        j["flagged"] = r.flagged;
        j["printed"] = r.printed;
        if (extended) {
            j["rule_of_thumb"] = r.rule;
            j["conjectured"] = r.conjectured;
        }
        arr.push_back(std::move(j));
    }
    return arr.dump(2) + "\n";
}

int cmd_pack(const std::string& generator, double t, double R, double eps, std::uint64_t seed,
             bool uncapped, const std::string& out_path) {
    Packing p;
    if (generator == "hex")
        p = gen_hexagonal_parallel(t, R, !uncapped);
    else
        p = gen_laminated_perturbed(t, R, eps, seed, !uncapped);

    if (!out_path.empty()) write_packing_file(p, out_path);
    const double inner = R - 2.0 / std::sqrt(3.0);
    std::cout << std::setprecision(6) << std::fixed;
    std::cout << "cylinders: " << p.size() << "\n";
    std::cout << "density(R,R): " << density(p, R, R) << "\n";
    if (inner > 0.0) std::cout << "density(R-2/sqrt3,R): " << density(p, inner, R) << "\n";
    return 0;
}

int cmd_slice(const std::string& file, int index, double s, const std::string& svg_path,
              const std::string& json_path, double tol, bool reproducible) {
    const Packing p = read_packing_file(file);
    if (index < 0 || index >= int(p.size()))
        throw DomainError("slice: cylinder index out of range");
    if (s < 0.0 || s > 1.0) throw DomainError("slice: s must be in [0,1]");

    const Vec3 x = p.axes[index].at(s);
    SliceOptions opts;
    opts.area_rel_tol = tol;
    const DirichletSlice slice = build_slice(p, index, x, opts);

    SliceReport rep;
    rep.area = slice_area(p, index, x, tol);
    rep.end_near = has_end_near(p, x);
    rep.qualified = rep.area > std::sqrt(12.0) + tol;

    const bool hypotheses = !rep.end_near && norm(x) <= p.R - 2.0 / std::sqrt(3.0);
    if (hypotheses) {
        const TruncateResult tr = truncate_rearrange(slice);
        rep.truncation_valid = true;
        rep.area_dstar = tr.area_dstar;
        rep.area_dstarstar = tr.area_dstarstar;
    }

    std::cout << std::setprecision(8);
    std::cout << "area: " << rep.area << "\n";
    std::cout << "qualified: " << (rep.qualified ? "true" : "false") << "\n";
    std::cout << "has_end_near: " << (rep.end_near ? "true" : "false") << "\n";
    if (rep.truncation_valid) {
        std::cout << "area_dstar: " << rep.area_dstar << "\n";
        std::cout << "area_dstarstar: " << rep.area_dstarstar << "\n";
    }
    if (!svg_path.empty()) write_or_print(slice_to_svg(slice, reproducible), svg_path);
    if (!json_path.empty()) write_or_print(slice_to_json(slice, rep), json_path);
    return 0;
}

int report_suite(const SuiteResult& suite) {
    std::cout << std::setprecision(10);
    for (const CheckResult& c : suite.checks) {
        std::cout << (c.pass ? "PASS" : "FAIL") << "  " << c.name << "  margin=" << c.margin
                  << "  " << c.detail << "\n";
        if (!c.pass) {
            json w;
            w["check"] = c.name;
            w["margin"] = c.margin;
            w["detail"] = c.detail;
            std::cerr << "witness: " << w.dump() << "\n";
        }
    }
    std::cout << "suite " << suite.suite << ": " << (suite.pass ? "PASS" : "FAIL") << "\n";
    return suite.pass ? 0 : 1;
}

} // namespace

int run_cli(std::vector<std::string> args) {
    CLI::App app{"cylinder packing density bounds"};
    app.set_config("--config");
    app.require_subcommand(1);

    // bound
    auto* bound = app.add_subcommand("bound", "evaluate a density bound");
    double bound_t = 0.0;
    std::string bound_shape = "capped";
    bound->add_option("--t", bound_t, "cylinder length")->required();
    bound->add_option("--shape", bound_shape, "capped|uncapped")
        ->check(CLI::IsMember({"capped", "uncapped"}));

    // table
    auto* table = app.add_subcommand("table", "reproduce the examples table");
    bool table_extended = false;
    std::string table_format = "csv";
    std::string table_out;
    table->add_flag("--extended", table_extended, "add rule-of-thumb and conjectured columns");
    table->add_option("--format", table_format, "csv|json")
        ->check(CLI::IsMember({"csv", "json"}));
    table->add_option("--out", table_out, "output path (default stdout)");

    // pack
    auto* pack = app.add_subcommand("pack", "generate a packing");
    std::string pack_gen;
    double pack_t = 10.0, pack_R = 30.0, pack_eps = 0.0;
    std::uint64_t pack_seed = default_seed();
    bool pack_uncapped = false;
    std::string pack_out;
    pack->add_option("generator", pack_gen, "hex|laminate")
        ->required()
        ->check(CLI::IsMember({"hex", "laminate"}));
    pack->add_option("--t", pack_t, "cylinder length")->required();
    pack->add_option("--R", pack_R, "container ball radius")->required();
    pack->add_option("--eps", pack_eps, "laminate perturbation");
    pack->add_option("--seed", pack_seed, "random seed");
    pack->add_flag("--uncapped", pack_uncapped, "generate uncapped cylinders");
    pack->add_option("--out", pack_out, "packing json output path");

    // slice
    auto* slice = app.add_subcommand("slice", "compute a Dirichlet slice");
    std::string slice_file, slice_svg, slice_json;
    int slice_index = 0;
    double slice_s = 0.5, slice_tol = 1e-6;
    bool slice_repro = false;
    slice->add_option("file", slice_file, "packing json file")->required();
    slice->add_option("--index", slice_index, "cylinder index");
    slice->add_option("--s", slice_s, "axis parameter in [0,1]");
    slice->add_option("--svg", slice_svg, "svg output path");
    slice->add_option("--json", slice_json, "json output path");
    slice->add_option("--tol", slice_tol, "area tolerance")->check(CLI::PositiveNumber);
    slice->add_flag("--reproducible", slice_repro, "omit metadata from outputs");

    // verify
    auto* verify = app.add_subcommand("verify", "run a verification suite");
    std::string suite_name;
    VerifyOptions vopt;
    vopt.seed = default_seed();
    bool quick = false;
    verify->add_option("suite", suite_name, "extremal|three-ball|qualified|angle|identity|dominance|all")
        ->required()
        ->check(CLI::IsMember(
            {"extremal", "three-ball", "qualified", "angle", "identity", "dominance", "all"}));
    verify->add_option("--seed", vopt.seed, "random seed");
    verify->add_option("--jobs", vopt.jobs, "worker threads (does not change results)");
    verify->add_option("--packings", vopt.packings, "qualified-suite packing count");
    verify->add_option("--points", vopt.points, "protected points per packing");
    verify->add_option("--configs", vopt.configs, "angle-suite configuration count");
    verify->add_option("--samples", vopt.samples, "identity-suite Monte Carlo samples");
    verify->add_option("--multistarts", vopt.multistarts, "extremal multistart count");
    verify->add_flag("--quick", quick, "reduced problem sizes for smoke runs");

    try {
        std::reverse(args.begin(), args.end());
        app.parse(std::move(args));
    } catch (const CLI::CallForHelp& e) {
        std::cout << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    }

    try {
        if (*bound) {
            if (!(bound_t > 0.0)) {
                std::cerr << "bound: --t must be positive\n";
                return 2;
            }
            return cmd_bound(bound_t, bound_shape);
        }
        if (*table) {
            const auto rows = make_table();
            const std::string text = (table_format == "json") ? table_json(rows, table_extended)
                                                              : table_csv(rows, table_extended);
            write_or_print(text, table_out);
            return 0;
        }
        if (*pack)
            return cmd_pack(pack_gen, pack_t, pack_R, pack_eps, pack_seed, pack_uncapped,
                            pack_out);
        if (*slice)
            return cmd_slice(slice_file, slice_index, slice_s, slice_svg, slice_json, slice_tol,
                             slice_repro);
        if (*verify) {
            if (quick) {
                vopt.packings = std::min(vopt.packings, 10);
                vopt.configs = std::min(vopt.configs, 25);
                vopt.samples = std::min<long long>(vopt.samples, 200000);
                vopt.multistarts = std::min(vopt.multistarts, 6);
                vopt.seeds = std::min(vopt.seeds, 3);
                vopt.grid_points = std::min(vopt.grid_points, 500);
            }
            SuiteResult res;
            if (suite_name == "extremal") res = verify_extremal(vopt);
            else if (suite_name == "three-ball") res = verify_three_ball(vopt);
            else if (suite_name == "qualified") res = verify_qualified(vopt);
            else if (suite_name == "angle") res = verify_angle(vopt);
            else if (suite_name == "identity") res = verify_identity(vopt);
            else if (suite_name == "dominance") res = verify_dominance(vopt);
            else res = verify_all(vopt);
            return report_suite(res);
        }
    } catch (const ContainerTooSmall& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const FormatError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    } catch (const DomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}

} // namespace cylpack
