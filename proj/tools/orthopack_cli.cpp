#include "orthopack/match.hpp"
#include "orthopack/svg_render.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>

namespace {

using namespace orthopack;

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << text;
}

void emit(const MatchResult& res, const std::string& result_out, bool stdio_algorithm = false) {
    // A custom-stdio contestant owns stdout; keep the result off its wire.
    (stdio_algorithm ? std::cerr : std::cout) << res.to_json() << "\n";
    if (!result_out.empty()) write_file(result_out, res.to_json() + "\n");
}

int finish(const MatchResult& res) { return res.ok() ? 0 : 1; }

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"orthopack: exact-arithmetic harness for online packing of orthogonal polygons"};
    app.require_subcommand(1);

    std::string instance_path, algorithm = "trivial", family, out_path, packing_path;
    std::string trace_out, svg_out, cert_out, result_out, trace_in;
    long n = 8, k = 0;
    std::uint64_t seed = 1;
    std::string t_str, w_str;
    bool bound_audit = false;

    auto* run = app.add_subcommand("run", "run an algorithm on an instance file");
    run->add_option("--instance", instance_path)->required();
    run->add_option("--algorithm", algorithm)->required();
    run->add_flag("--bound-audit", bound_audit);
    run->add_option("--trace-out", trace_out);
    run->add_option("--trace-in", trace_in, "replay packing for custom-via-trace");
    run->add_option("--svg-out", svg_out);
    run->add_option("--result-out", result_out);

    auto* adv = app.add_subcommand("adversary", "drive a lower-bound family against an algorithm");
    adv->add_option("--family", family)->required()->check(
        CLI::IsMember({"binsorting", "lk", "zskel", "zshape", "density-ub"}));
    adv->add_option("--n", n)->required();
    adv->add_option("--algorithm", algorithm)->required();
    adv->add_option("--seed", seed);
    adv->add_option("--t", t_str);
    adv->add_option("--w", w_str);
    adv->add_option("--trace-out", trace_out);
    adv->add_option("--svg-out", svg_out);
    adv->add_option("--cert-out", cert_out);
    adv->add_option("--result-out", result_out);

    auto* gen = app.add_subcommand("gen", "generate a reproducible instance file");
    gen->add_option("--family", family)->required()->check(CLI::IsMember(
        {"uniform-small", "large-symmetric", "lk", "skeleton-mixed", "density-budget"}));
    gen->add_option("--n", n)->required();
    gen->add_option("--k", k);
    gen->add_option("--t", t_str);
    gen->add_option("--seed", seed);
    gen->add_option("--out", out_path)->required();

    auto* render = app.add_subcommand("render", "render a packing file to SVG");
    render->add_option("--packing", packing_path)->required();
    render->add_option("--svg-out", svg_out)->required();

    std::vector<std::string> result_files;
    auto* report = app.add_subcommand("report", "summarize result files");
    report->add_option("files", result_files)->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (*run) {
            InstanceFile inst = load_instance(instance_path);
            InstanceFile packing_file;
            std::optional<InstanceFile> replay;
            if (!trace_in.empty()) replay = load_instance(trace_in);
            MatchResult res =
                run_match(inst, algorithm, bound_audit, &packing_file,
                          replay ? &*replay : nullptr, &std::cin, &std::cout);
            if (!trace_out.empty() && !packing_file.items.empty())
                write_file(trace_out, format_instance(packing_file));
            if (!svg_out.empty() && !packing_file.items.empty())
                write_file(svg_out, render_packing_svg(packing_file));
            emit(res, result_out, algorithm == "custom-stdio");
            return finish(res);
        }
        if (*adv) {
            std::optional<Rational> t, w;
            if (!t_str.empty()) t = Rational::parse(t_str);
            if (!w_str.empty()) w = Rational::parse(w_str);
            AdversaryOutputs outs;
            MatchResult res =
                run_adversary(family, n, algorithm, seed, &outs, t, w, &std::cin, &std::cout);
            if (!trace_out.empty()) write_file(trace_out, outs.trace_text);
            if (outs.certificate) {
                if (!cert_out.empty()) write_file(cert_out, format_instance(*outs.certificate));
                if (!svg_out.empty()) write_file(svg_out, render_packing_svg(*outs.certificate));
            }
            emit(res, result_out, algorithm == "custom-stdio");
            return finish(res);
        }
        if (*gen) {
            Rational t = t_str.empty() ? Rational(1, 2) : Rational::parse(t_str);
            InstanceFile f = gen_instance(family, n, k, t, seed);
            save_instance(f, out_path);
            std::cout << "wrote " << out_path << " (" << f.items.size() + f.numbers.size()
                      << " items)\n";
            return 0;
        }
        if (*render) {
            InstanceFile f = load_instance(packing_path);
            write_file(svg_out, render_packing_svg(f));
            std::cout << "wrote " << svg_out << "\n";
            return 0;
        }
        if (*report) {
            bool all_ok = true;
            for (const auto& path : result_files) {
                std::ifstream in(path);
                if (!in) throw std::runtime_error("cannot open " + path);
                nlohmann::json j = nlohmann::json::parse(in);
                bool ok = j.value("ok", false);
                all_ok = all_ok && ok;
                std::cout << (ok ? "PASS " : "FAIL ") << path << "  " << j.value("algorithm", "?")
                          << " on " << j.value("family", "?") << ": " << j.value("objective", "?")
                          << "=";
                if (j.contains("metric"))
                    std::cout << j["metric"].get<std::string>();
                else
                    std::cout << j.value("bins", 0);
                if (j.contains("bound"))
                    std::cout << "  [" << j["bound"].get<std::string>() << "]";
                std::cout << "\n";
            }
            return all_ok ? 0 : 1;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
