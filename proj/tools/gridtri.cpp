#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "gridtri/core.hpp"
#include "gridtri/enumeration.hpp"
#include "gridtri/json_io.hpp"
#include "gridtri/regularity.hpp"
#include "gridtri/reporting.hpp"
#include "gridtri/rng.hpp"
#include "gridtri/shapes.hpp"
#include "gridtri/strips.hpp"
#include "gridtri/svg.hpp"
#include "gridtri/walk.hpp"

namespace {

using namespace gridtri;

std::string rat_str(const Rat& r) {
    Rat c = r;
    c.canonicalize();
    if (c.get_den() == 1) return c.get_num().get_str();
    return c.get_num().get_str() + "/" + c.get_den().get_str();
}

void emit_sample(const Triangulation& t, const std::string& dir, uint64_t idx) {
    std::filesystem::create_directories(dir);
    char name[32];
    std::snprintf(name, sizeof(name), "tri_%06llu.json", static_cast<unsigned long long>(idx));
    write_triangulation_file(t, (std::filesystem::path(dir) / name).string());
}

int cmd_count(const std::string& method, int m, int n, bool prune, bool census,
              uint64_t budget, bool validate_shapes) {
    GridSpec g(m, n);
    if (method == "strip") {
        int w = std::min(m, n), len = std::max(m, n);
        if (w > 3) throw std::invalid_argument("count --method strip: needs min(m,n) <= 3");
        BigCount c = w == 1   ? strips::count_width1(len)
                     : w == 2 ? strips::count_width2(len)
                              : strips::count_width3(len);
        std::cout << to_decimal(c) << "\n";
        return 0;
    }
    if (method != "dp") throw std::invalid_argument("count: method must be strip or dp");
    shapes::DpOptions opt;
    opt.prune = prune;
    opt.budget_bytes = budget;
    opt.validate_shapes = validate_shapes;
    shapes::DpStats stats;
    BigCount c = shapes::count_by_dp(g, opt, &stats);
    std::cout << to_decimal(c) << "\n";
    if (census)
        std::cout << to_decimal(stats.shape_count) << "," << stats.peak_resident << "\n";
    return 0;
}

int cmd_enumerate(int m, int n, bool tally, const std::string& emit_dir,
                  const std::string& kth_str, uint64_t budget, int threads) {
    GridSpec g(m, n);
    enumeration::EnumerateOptions opt;
    opt.budget_bytes = budget;
    opt.threads = threads;
    if (!kth_str.empty()) {
        BigCount k(kth_str);
        std::cout << to_json(enumeration::kth(g, k, opt));
        return 0;
    }
    if (tally) {
        auto res = enumeration::tally_regularity(g, opt);
        std::cout << to_decimal(res.total) << "," << to_decimal(res.regular) << ","
                  << to_decimal(res.irregular) << "\n";
        return 0;
    }
    BigCount total = enumeration::enumerate_all(
        g,
        [&](const Triangulation& t, uint64_t idx) {
            if (!emit_dir.empty()) emit_sample(t, emit_dir, idx);
        },
        opt);
    std::cout << to_decimal(total) << "\n";
    return 0;
}

int cmd_sample(int m, int n, const std::string& method, int count, uint64_t seed,
               const std::string& emit_dir) {
    GridSpec g(m, n);
    Rng rng(seed);
    if (method == "dp") {
        shapes::DpTables tables;
        shapes::count_by_dp(g, {}, nullptr, &tables);
        for (int i = 0; i < count; ++i) {
            auto t = shapes::dp_sample(tables, rng);
            if (emit_dir.empty())
                std::cout << to_json(t);
            else
                emit_sample(t, emit_dir, i);
        }
        return 0;
    }
    if (method != "kth") throw std::invalid_argument("sample: method must be kth or dp");
    BigCount total = shapes::count_by_dp(g);
    for (int i = 0; i < count; ++i) {
        // uniform k in [1, total]
        size_t bits = mpz_sizeinbase(total.get_mpz_t(), 2);
        size_t words = (bits + 63) / 64;
        BigCount draw;
        do {
            draw = 0;
            for (size_t w = 0; w < words; ++w) {
                draw <<= 64;
                draw += BigCount(static_cast<unsigned long>(rng.next()));
            }
            draw >>= static_cast<unsigned long>(64 * words - bits);
        } while (draw >= total);
        auto t = enumeration::kth(g, draw + 1);
        if (emit_dir.empty())
            std::cout << to_json(t);
        else
            emit_sample(t, emit_dir, i);
    }
    return 0;
}

int cmd_walk(int m, int n, uint64_t steps, uint64_t record_every, uint64_t seed, bool stats,
             const std::string& emit_dir) {
    walk::WalkConfig cfg;
    cfg.grid = GridSpec(m, n);
    cfg.steps = steps;
    cfg.record_every = record_every;
    cfg.seed = seed;
    std::vector<Triangulation> samples;
    walk::run_walk(cfg, [&](const Triangulation& t, uint64_t idx) {
        if (!emit_dir.empty()) emit_sample(t, emit_dir, idx);
        if (stats)
            samples.push_back(t);
        else if (emit_dir.empty())
            std::cout << to_json(t);
    });
    if (stats) {
        auto s = walk::summarize(
            samples, [](const Triangulation& t) { return regularity::is_regular(t).regular; });
        std::printf("%dx%d,%.6f,%.6f,%.6f\n", m, n, s.irregular_fraction, s.mean_max_edge,
                    s.mean_avg_edge);
    }
    return 0;
}

int cmd_check(const std::string& file, const std::string& cert_path,
              const std::string& config_path) {
    auto t = read_triangulation_file(file);
    auto rep = validate(t);
    if (!rep.valid) {
        std::cerr << "invalid triangulation: " << rep.violations.front().kind << " "
                  << rep.violations.front().detail << "\n";
        return 1;
    }
    auto sys = regularity::fold_constraints(t);
    auto res = regularity::solve_strict(sys);
    std::cout << (res.regular ? "regular" : "irregular") << "\n";
    if (!cert_path.empty()) {
        std::ofstream out(cert_path);
        if (!out) throw std::runtime_error("cannot write " + cert_path);
        if (res.regular) {
            out << "{\"lifting\":[";
            for (size_t i = 0; i < res.lifting.size(); ++i) {
                if (i) out << ",";
                out << "{\"point\":[" << sys.points[i].x << "," << sys.points[i].y
                    << "],\"height\":\"" << rat_str(res.lifting[i]) << "\"}";
            }
            out << "]}\n";
        } else {
            out << "{\"certificate\":[";
            for (size_t i = 0; i < res.certificate.size(); ++i) {
                if (i) out << ",";
                out << "\"" << rat_str(res.certificate[i]) << "\"";
            }
            out << "]}\n";
        }
        std::cout << (res.regular ? "lifting" : "certificate") << " written to " << cert_path
                  << "\n";
    }
    if (!config_path.empty()) {
        if (res.regular) throw std::invalid_argument("--minimal-config: triangulation is regular");
        auto cfg = regularity::minimal_irregular(t);
        Triangulation as_set{t.grid, cfg.triangles};
        std::ofstream out(config_path);
        if (!out) throw std::runtime_error("cannot write " + config_path);
        out << to_json(as_set);
        std::cout << "minimal configuration (" << cfg.triangles.size() << " triangles) written to "
                  << config_path << "\n";
    }
    return 0;
}

int cmd_capacity(int m, int n_max, const std::string& format) {
    auto fmt = format == "text" ? reporting::TableFormat::text : reporting::TableFormat::csv;
    std::cout << reporting::emit_table(m, n_max, fmt);
    return 0;
}

int cmd_bounds(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::vector<reporting::CapacityRow> rows;
    std::vector<reporting::TallyRow> tallies;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::vector<std::string> cells;
        std::stringstream ss(line);
        std::string cell;
        while (std::getline(ss, cell, ',')) cells.push_back(cell);
        if (cells.size() < 3 || !isdigit(static_cast<unsigned char>(cells[0][0]))) continue;
        int m = std::stoi(cells[0]), n = std::stoi(cells[1]);
        BigCount count(cells[2]);
        if (cells.size() >= 5) {
            tallies.push_back({m, n, count, BigCount(cells[3]), BigCount(cells[4])});
        } else {
            rows.push_back({m, n, count, 0.0});
        }
    }
    auto rep = reporting::bound_checks(rows, tallies);
    for (const auto& c : rep.checks)
        std::cout << (c.pass ? "PASS" : "FAIL") << "," << c.name << "," << c.lhs << "," << c.rhs
                  << "\n";
    return rep.all_pass ? 0 : 1;
}

int cmd_render(const std::string& file, const std::string& out_path,
               const std::string& highlight_path) {
    auto t = read_triangulation_file(file);
    std::optional<regularity::Configuration> highlight;
    if (!highlight_path.empty()) {
        auto h = read_triangulation_file(highlight_path);
        highlight = regularity::Configuration::from_triangles(h.triangles);
    }
    auto svg_text = svg::render_svg(t, highlight);
    if (out_path.empty()) {
        std::cout << svg_text;
    } else {
        std::ofstream out(out_path, std::ios::binary);
        if (!out) throw std::runtime_error("cannot write " + out_path);
        out << svg_text;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact counting, enumeration, sampling and regularity testing of "
                 "unimodular triangulations of the m x n grid"};
    app.require_subcommand(1);

    int m = 2, n = 2, n_max = 8, threads = 0, count = 1;
    uint64_t steps = 0, record_every = 1, seed = gridtri::kDefaultSeed;
    uint64_t budget = 2ULL << 30;
    bool prune = false, census = false, validate_shapes = false, tally = false, stats = false;
    std::string method = "dp", emit_dir, kth_str, file, cert_path, config_path, out_path,
        highlight_path, format = "csv", from_path;

    auto* c_count = app.add_subcommand("count", "count triangulations exactly");
    c_count->add_option("--method", method)->check(CLI::IsMember({"strip", "dp"}));
    c_count->add_option("-m", m)->required();
    c_count->add_option("-n", n)->required();
    c_count->add_flag("--prune", prune);
    c_count->add_flag("--census", census);
    c_count->add_flag("--validate-shapes", validate_shapes);
    c_count->add_option("--budget-bytes", budget);

    auto* c_enum = app.add_subcommand("enumerate", "visit every triangulation");
    c_enum->add_option("-m", m)->required();
    c_enum->add_option("-n", n)->required();
    c_enum->add_flag("--tally-regularity", tally);
    c_enum->add_option("--emit-json", emit_dir);
    c_enum->add_option("--kth", kth_str);
    c_enum->add_option("--budget-bytes", budget);
    c_enum->add_option("--threads", threads);

    auto* c_sample = app.add_subcommand("sample", "draw random triangulations");
    c_sample->add_option("-m", m)->required();
    c_sample->add_option("-n", n)->required();
    c_sample->add_option("--method", method)->check(CLI::IsMember({"kth", "dp"}));
    c_sample->add_option("--count", count);
    c_sample->add_option("--seed", seed);
    c_sample->add_option("--emit-json", emit_dir);

    auto* c_walk = app.add_subcommand("walk", "lazy flip random walk");
    c_walk->add_option("-m", m)->required();
    c_walk->add_option("-n", n)->required();
    c_walk->add_option("--steps", steps)->required();
    c_walk->add_option("--record-every", record_every);
    c_walk->add_option("--seed", seed);
    c_walk->add_flag("--stats", stats);
    c_walk->add_option("--emit-json", emit_dir);
    c_walk->add_option("--threads", threads);

    auto* c_check = app.add_subcommand("check", "decide regularity of a triangulation file");
    c_check->add_option("file", file)->required();
    c_check->add_option("--certificate", cert_path);
    c_check->add_option("--minimal-config", config_path);

    auto* c_cap = app.add_subcommand("capacity", "emit count/capacity table");
    c_cap->add_option("-m", m)->required();
    c_cap->add_option("--n-max", n_max)->required();
    c_cap->add_option("--format", format)->check(CLI::IsMember({"csv", "text"}));

    auto* c_bounds = app.add_subcommand("bounds", "verify bounds against a results csv");
    c_bounds->add_option("--from", from_path)->required();

    auto* c_render = app.add_subcommand("render", "render a triangulation to SVG");
    c_render->add_option("file", file)->required();
    c_render->add_option("-o", out_path);
    c_render->add_option("--highlight", highlight_path);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (c_count->parsed())
            return cmd_count(method == "kth" ? "dp" : method, m, n, prune, census, budget,
                             validate_shapes);
        if (c_enum->parsed()) return cmd_enumerate(m, n, tally, emit_dir, kth_str, budget, threads);
        if (c_sample->parsed()) return cmd_sample(m, n, method, count, seed, emit_dir);
        if (c_walk->parsed()) return cmd_walk(m, n, steps, record_every, seed, stats, emit_dir);
        if (c_check->parsed()) return cmd_check(file, cert_path, config_path);
        if (c_cap->parsed()) return cmd_capacity(m, n_max, format);
        if (c_bounds->parsed()) return cmd_bounds(from_path);
        if (c_render->parsed()) return cmd_render(file, out_path, highlight_path);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
