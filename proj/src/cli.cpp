#include "twodist/cli.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <sstream>

#include "CLI11.hpp"
#include "twodist/catalog.hpp"
#include "twodist/errors.hpp"
#include "twodist/exactgeom.hpp"
#include "twodist/serialization.hpp"

namespace twodist::cli {

using io::json;

std::string fnv1a_hex(const std::string& bytes) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    std::ostringstream os;
    os << std::hex << std::setw(16) << std::setfill('0') << h;
    return os.str();
}

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot read '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream os(path, std::ios::binary);
    if (!os) throw InvalidArgument("cannot write '" + path + "'");
    os << text;
}

json parse_json(const std::string& text, const std::string& origin) {
    try {
        return json::parse(text);
    } catch (const json::exception& e) {
        throw ParseError(origin + ": " + e.what());
    }
}

struct Context {
    std::ostringstream out;  // stdout payload, hashed for the manifest
    std::ostream& err;
    std::vector<std::string> inputs;
    std::vector<std::string> outputs;
    std::uint64_t scanned = 0;

    void emit(const json& j) { out << j.dump(2) << "\n"; }
    void save(const std::string& path, const std::string& text) {
        write_file(path, text);
        outputs.push_back(path);
    }
    std::string load(const std::string& path) {
        inputs.push_back(path);
        return read_file(path);
    }
};

int thread_count(int flag) {
    if (const char* env = std::getenv("SIMPLEX2DIST_THREADS")) {
        try {
            const int v = std::stoi(env);
            if (v >= 1) return v;
        } catch (const std::exception&) {
        }
    }
    return std::max(1, flag);
}

std::optional<paramspace::MSetRule> parse_m_rule(const std::string& text) {
    if (text == "auto") return std::nullopt;
    if (text == "s-squared") return paramspace::MSetRule::SquareS;
    if (text == "s-minus-one-squared") return paramspace::MSetRule::SquareSMinusOne;
    throw InvalidArgument("--m-rule must be auto, s-squared or s-minus-one-squared");
}

std::string spectrum_text(const std::set<Rational>& s) {
    std::string t = "{";
    for (const auto& x : s) t += (t.size() > 1 ? ", " : "") + x.to_string();
    return t + "}";
}

// ---------------------------------------------------------------------------

int cmd_params(Context& ctx, int s, const std::string& branch) {
    const auto b = paramspace::parse_branch(branch);
    json list = json::array();
    for (const auto& p : paramspace::admissible_params(s, b)) list.push_back(io::param_json(p));
    ctx.err << list.size() << " admissible tuples for s=" << s << " " << paramspace::to_string(b) << "\n";
    ctx.emit(list);
    return kOk;
}

int cmd_build(Context& ctx, const std::string& name, const std::string& out_path, const std::string& csv_path,
              bool no_extras) {
    catalog::BuildOptions opt;
    opt.include_extras = !no_extras;
    const auto inst = catalog::build_instance(name, opt);
    const json j = io::instance_json(inst);
    if (!csv_path.empty()) {
        std::vector<exactgeom::Point> pts;
        const auto& p = inst.params;
        if (inst.include_simplex) pts = exactgeom::simplex_points(p.d);
        for (const auto& m : inst.members()) pts.push_back(exactgeom::embed(m, p.d, m.weight(), p.beta));
        std::ostringstream os;
        exactgeom::write_csv(os, pts);
        ctx.save(csv_path, os.str());
    }
    ctx.err << inst.name << ": " << inst.size() << " points, d=" << inst.params.d << ", s=" << inst.params.s
            << ", alpha=" << inst.params.alpha << "\n";
    if (out_path.empty()) {
        ctx.emit(j);
    } else {
        ctx.save(out_path, j.dump(2) + "\n");
        ctx.emit(json{{"name", inst.name},
                      {"size", inst.size()},
                      {"d", inst.params.d},
                      {"s", inst.params.s},
                      {"alpha", inst.params.alpha.to_string()},
                      {"out", out_path}});
    }
    return kOk;
}

searcher::Instance load_instance(Context& ctx, const std::string& path,
                                 std::optional<paramspace::MSetRule> rule = std::nullopt) {
    return io::instance_from_json(parse_json(ctx.load(path), path), rule);
}

int cmd_verify(Context& ctx, const std::string& path, int exact_max_d) {
    const auto inst = load_instance(ctx, path);
    searcher::VerifyOptions opt;
    opt.exact_geometry_max_d = exact_max_d;
    const auto rep = searcher::verify_instance(inst, opt);
    ctx.emit(io::report_json(rep));
    if (rep.valid) {
        ctx.err << inst.name << ": 2-distance check passed, " << rep.points << " points, spectrum "
                << spectrum_text(rep.spectrum) << (rep.exact_geometry ? " (exact geometry)" : " (combinatorial)")
                << "\n";
    } else {
        const auto& v = *rep.violation;
        ctx.err << inst.name << ": violation " << v.kind << " between " << v.first
                << (v.second.empty() ? "" : " and " + v.second) << "\n";
    }
    for (const auto& w : rep.warnings) ctx.err << "warning: " << w << "\n";
    return rep.valid ? kOk : kNegative;
}

int cmd_maximal(Context& ctx, const std::string& path, const std::string& method, std::uint64_t cap, int threads,
                const std::string& m_rule, std::size_t max_listed) {
    searcher::SearchOptions opt;
    opt.method = searcher::parse_method(method);
    opt.cap = cap;
    opt.threads = thread_count(threads);
    opt.max_listed = max_listed;
    const auto inst = load_instance(ctx, path, parse_m_rule(m_rule));
    searcher::VerifyOptions vopt;
    vopt.exact_geometry_max_d = -1;
    const auto check = searcher::verify_instance(inst, vopt);
    if (!check.valid) {
        ctx.err << inst.name << ": not a 2-distance set under the selected overlap rule ("
                << check.violation->kind << " between " << check.violation->first << " and "
                << check.violation->second << ")\n";
        return kUsage;
    }
    const auto rep = searcher::maximality_check(inst, opt);
    ctx.scanned = rep.scanned;
    ctx.emit(io::maximality_json(rep));
    ctx.err << inst.name << ": " << searcher::to_string(rep.verdict) << " (" << searcher::to_string(rep.method)
            << ", " << rep.scanned << " candidates scanned)";
    if (rep.counterexample) {
        ctx.err << ", least extension " << rep.counterexample->base.to_string() << ", " << rep.extension_count
                << " extensions in total";
    }
    ctx.err << "\n";
    return rep.verdict == searcher::Verdict::Maximal ? kOk : kNegative;
}

int cmd_table1(Context& ctx, int max_s, bool certify, std::uint64_t cap, int threads) {
    if (max_s < 2) throw InvalidArgument("--max-s must be at least 2");
    json rows = json::array();
    bool sizes_match = true;
    bool all_valid = true;
    bool all_maximal = true;
    std::map<int, std::vector<std::size_t>> by_dimension;
    ctx.err << std::left << std::setw(18) << "name" << std::setw(5) << "d" << std::setw(7) << "size" << std::setw(4)
            << "s" << std::setw(10) << "spectrum" << std::setw(13) << "maximality"
            << "added set\n";
    for (const auto& e : catalog::entries()) {
        if (e.name.rfind("resolvable-s", 0) == 0 && e.s > max_s) continue;
        const auto inst = catalog::build_instance(e.name);
        const auto rep = searcher::verify_instance(inst);
        sizes_match = sizes_match && inst.size() == e.expected_size;
        all_valid = all_valid && rep.valid;
        by_dimension[e.d].push_back(inst.size());
        json row{{"name", e.name},
                 {"d", e.d},
                 {"size", inst.size()},
                 {"expectedSize", e.expected_size},
                 {"s", e.s},
                 {"alpha", inst.params.alpha.to_string()},
                 {"addedSet", e.added_set},
                 {"verification", io::report_json(rep)}};
        std::string status = "not run";
        if (certify) {
            searcher::SearchOptions opt;
            opt.cap = cap;
            opt.threads = thread_count(threads);
            opt.max_listed = 20;
            try {
                const auto mr = searcher::maximality_check(inst, opt);
                ctx.scanned += mr.scanned;
                status = searcher::to_string(mr.verdict);
                all_maximal = all_maximal && mr.verdict == searcher::Verdict::Maximal;
                row["maximality"] = io::maximality_json(mr);
            } catch (const ResourceCapExceeded& ex) {
                status = "over cap";
                row["maximality"] = json{{"error", ex.what()}};
            }
        }
        row["certification"] = status;
        ctx.err << std::setw(18) << e.name << std::setw(5) << e.d << std::setw(7) << inst.size() << std::setw(4) << e.s
                << std::setw(10) << spectrum_text(rep.spectrum) << std::setw(13) << status << e.added_set << "\n";
        rows.push_back(row);
    }
    ctx.emit(json{{"rows", rows}, {"sizesMatch", sizes_match}, {"allValid", all_valid}});
    if (!sizes_match || !all_valid) return kNegative;
    return certify && !all_maximal ? kNegative : kOk;
}

designs::Design named_design(const std::string& name, int s) {
    if (name == "witt") return designs::witt_4_23_7();
    if (name == "witt-complement") return designs::complement_design(designs::witt_4_23_7());
    if (name == "derived") return designs::derived_design(designs::witt_4_23_7(), 0);
    if (name == "residual") return designs::residual_2_21_7_12();
    if (name == "affine") return designs::affine_planes(s);
    throw InvalidArgument("unknown design '" + name + "' (witt, witt-complement, derived, residual, affine)");
}

int cmd_design(Context& ctx, const std::string& name, int s, const std::string& out_path) {
    const auto d = named_design(name, s);
    ctx.err << name << ": " << d.v << " points, " << d.blocks.size() << " blocks of size " << d.block_size() << "\n";
    const json j = io::design_json(d);
    if (out_path.empty()) {
        ctx.emit(j);
    } else {
        ctx.save(out_path, j.dump(2) + "\n");
        ctx.emit(json{{"v", d.v}, {"blocks", d.blocks.size()}, {"out", out_path}});
    }
    return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact construction and certification of maximal 2-distance sets containing a simplex",
                 "simplex2dist"};
    app.require_subcommand(1);
    app.fallthrough();
    std::string manifest;
    app.add_option("--manifest", manifest, "write a run manifest to this file");

    int s = 0;
    std::string branch;
    auto* params = app.add_subcommand("params", "admissible (d, k, k', beta, alpha) for an LRS ratio");
    params->add_option("--s", s, "LRS ratio")->required();
    params->add_option("--branch", branch, "below or above")->required();

    std::string name, out_path, csv_path;
    bool no_extras = false;
    auto* build = app.add_subcommand("build", "build a named instance");
    build->add_option("--name", name, "instance name")->required();
    build->add_option("--out", out_path, "instance JSON file");
    build->add_option("--csv", csv_path, "coordinate CSV file");
    build->add_flag("--no-extras", no_extras, "withhold the extra vector");

    std::string file;
    int exact_max_d = 31;
    auto* verify = app.add_subcommand("verify", "check the 2-distance property of an instance file");
    verify->add_option("file", file, "instance JSON")->required();
    verify->add_option("--exact-max-d", exact_max_d, "largest d checked by exact geometry");

    std::string method = "decomposed", m_rule = "auto";
    std::uint64_t cap = 4'000'000'000ULL;
    int threads = 1;
    std::size_t max_listed = 1000;
    auto* maximal = app.add_subcommand("maximal", "exhaustive maximality check");
    maximal->add_option("file", file, "instance JSON")->required();
    maximal->add_option("--method", method, "brute or decomposed");
    maximal->add_option("--cap", cap, "maximum number of candidates to scan");
    maximal->add_option("--threads", threads, "worker threads");
    maximal->add_option("--m-rule", m_rule, "auto, s-squared or s-minus-one-squared");
    maximal->add_option("--max-listed", max_listed, "extensions listed in the report");

    int max_s = 5;
    bool certify = false;
    auto* table1 = app.add_subcommand("table1", "build and verify every row of the table");
    table1->add_option("--max-s", max_s, "largest s of the resolvable family");
    table1->add_flag("--certify", certify, "also run maximality checks");
    table1->add_option("--cap", cap, "maximum candidates per maximality check");
    table1->add_option("--threads", threads, "worker threads");

    std::string design_name;
    int design_s = 2;
    auto* design = app.add_subcommand("design", "design utilities");
    auto* design_export = design->add_subcommand("export", "write a design as JSON");
    design->require_subcommand(1);
    design_export->add_option("name", design_name, "witt, witt-complement, derived, residual, affine")->required();
    design_export->add_option("--s", design_s, "order of AG(3, s)");
    design_export->add_option("--out", out_path, "design JSON file");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    }

    Context ctx{{}, err, {}, {}, 0};
    const auto start = std::chrono::steady_clock::now();
    int code = kOk;
    try {
        if (*params) {
            code = cmd_params(ctx, s, branch);
        } else if (*build) {
            code = cmd_build(ctx, name, out_path, csv_path, no_extras);
        } else if (*verify) {
            code = cmd_verify(ctx, file, exact_max_d);
        } else if (*maximal) {
            code = cmd_maximal(ctx, file, method, cap, threads, m_rule, max_listed);
        } else if (*table1) {
            code = cmd_table1(ctx, max_s, certify, cap, threads);
        } else if (*design) {
            code = cmd_design(ctx, design_name, design_s, out_path);
        }
    } catch (const ResourceCapExceeded& e) {
        err << "error: " << e.what() << "\n";
        ctx.emit(json{{"error", "resource cap exceeded"}, {"required", e.required()}, {"cap", e.cap()}});
        code = kCapExceeded;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        code = kUsage;
    }
    const std::string payload = ctx.out.str();
    out << payload;

    if (!manifest.empty()) {
        json inputs = json::array();
        for (const auto& p : ctx.inputs) inputs.push_back(json{{"path", p}, {"fnv1a", fnv1a_hex(read_file(p))}});
        json outputs = json::array();
        for (const auto& p : ctx.outputs) outputs.push_back(json{{"path", p}, {"fnv1a", fnv1a_hex(read_file(p))}});
        const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        json m{{"command", args},
               {"exitCode", code},
               {"inputs", inputs},
               {"outputs", outputs},
               {"stdoutFnv1a", fnv1a_hex(payload)},
               {"determinism", "sampling uses fixed internal seeds; output depends only on the arguments and input files, not on the thread count"},
               {"wallClockSeconds", seconds},
               {"scanned", ctx.scanned}};
        try {
            write_file(manifest, m.dump(2) + "\n");
        } catch (const Error& e) {
            err << "error: " << e.what() << "\n";
            return kUsage;
        }
    }
    return code;
}

}  // namespace twodist::cli
