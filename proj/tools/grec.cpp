// Command-line surface for the rectangulation library: exact enumeration,
// the permutation <-> rectangulation maps, verification suites, statistics
// reports, and SVG rendering.

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>

#include "grec/clumps.hpp"
#include "grec/congruence.hpp"
#include "grec/enumerate.hpp"
#include "grec/errors.hpp"
#include "grec/json_io.hpp"
#include "grec/realize.hpp"
#include "grec/stats.hpp"

namespace {

using nlohmann::json;

void write_output(const std::string& path, const std::string& content) {
    if (path.empty() || path == "-") {
        std::cout << content;
        return;
    }
    std::ofstream file(path, std::ios::binary);
    if (!file) throw std::runtime_error("cannot open output file " + path);
    file << content;
}

std::string read_input(const std::string& path) {
    if (path == "-") {
        std::ostringstream buffer;
        buffer << std::cin.rdbuf();
        return buffer.str();
    }
    std::ifstream file(path, std::ios::binary);
    if (!file) throw std::runtime_error("cannot open input file " + path);
    std::ostringstream buffer;
    buffer << file.rdbuf();
    return buffer.str();
}

grec::Permutation parse_perm_argument(const std::string& text) {
    if (text == "-") {
        std::string line;
        std::getline(std::cin, line);
        return grec::Permutation::parse(line);
    }
    return grec::Permutation::parse(text);
}

int run_enumerate(const std::string& engine, int n, int k, int threads, long mem_cap,
                  const std::string& format, const std::string& out,
                  const std::string& checkpoint_out) {
    grec::GrowOptions options;
    options.threads = threads;
    options.max_distinct = static_cast<std::size_t>(mem_cap);

    std::vector<grec::BigCount> counts;
    if (engine == "2clumped") {
        counts = grec::count_2clumped(n, options);
    } else if (engine == "1clumped") {
        counts = grec::count_1clumped(n, options);
    } else if (engine == "baxter-formula") {
        for (int i = 1; i <= n; ++i) counts.push_back(grec::baxter_closed_form(i));
    } else if (engine == "brute") {
        for (int i = 1; i <= n; ++i) counts.push_back(grec::brute_count_k_clumped(i, k));
    } else {
        throw std::runtime_error("unknown engine " + engine);
    }

    if (!checkpoint_out.empty()) {
        grec::CountMap level = grec::initial_count_map();
        const grec::Engine which =
            engine == "1clumped" ? grec::Engine::one_clumped : grec::Engine::two_clumped;
        if (engine != "2clumped" && engine != "1clumped")
            throw std::runtime_error("--checkpoint requires a string engine");
        for (int i = 1; i < n; ++i) level = grec::grow(level, which, options);
        write_output(checkpoint_out, grec::count_map_checkpoint(level));
    }

    if (format == "json")
        write_output(out, grec::counts_json(counts).dump(2) + "\n");
    else
        write_output(out, grec::counts_csv(counts));
    return 0;
}

int run_verify(const std::string& suite, int n, std::string* report_out);

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"generic rectangulations and 2-clumped permutations"};
    app.require_subcommand(1);

    // enumerate
    auto* enumerate = app.add_subcommand("enumerate", "exact counting engines");
    std::string engine = "2clumped";
    int n_max = 10;
    int brute_k = 2;
    int threads = 1;
    long mem_cap = 20'000'000;
    std::string format = "csv";
    std::string out_path;
    std::string checkpoint_path;
    enumerate->add_option("--engine", engine, "2clumped | 1clumped | baxter-formula | brute")
        ->capture_default_str();
    enumerate->add_option("--n", n_max, "largest level to count")->required();
    enumerate->add_option("--k", brute_k, "clump bound for --engine brute")->capture_default_str();
    enumerate->add_option("--threads", threads, "worker threads for the string engines")
        ->capture_default_str();
    enumerate->add_option("--mem-cap", mem_cap, "cap on distinct strings per level")
        ->capture_default_str();
    enumerate->add_option("--format", format, "csv | json")->capture_default_str();
    enumerate->add_option("--out", out_path, "output path (default stdout)");
    enumerate->add_option("--checkpoint", checkpoint_path, "write the final level's string map");

    // map
    auto* map_cmd = app.add_subcommand("map", "map a permutation to its rectangulation");
    std::string perm_text;
    std::string emit = "json";
    std::string map_out;
    int scale = 48;
    bool no_labels = false;
    bool with_diagonal = false;
    map_cmd->add_option("perm", perm_text, "one-line notation, e.g. 3,5,1,2,4 (- for stdin)")
        ->required();
    map_cmd->add_option("--emit", emit, "json | svg")->capture_default_str();
    map_cmd->add_option("--out", map_out, "output path (default stdout)");
    map_cmd->add_option("--scale", scale, "svg scale")->capture_default_str();
    map_cmd->add_flag("--no-labels", no_labels, "omit id labels in svg");
    map_cmd->add_flag("--diagonal", with_diagonal, "overlay the diagonal in svg");

    // inverse
    auto* inverse = app.add_subcommand("inverse", "2-clumped preimage of a rectangulation");
    std::string inverse_path = "-";
    std::string inverse_out;
    inverse->add_option("input", inverse_path, "GenRect JSON file (- for stdin)");
    inverse->add_option("--out", inverse_out, "output path (default stdout)");

    // verify
    auto* verify = app.add_subcommand("verify", "run a verification suite");
    std::string suite;
    int verify_n = 5;
    std::string verify_out;
    verify->add_option("suite", suite, "bijection | congruence | statistics | roundtrip")
        ->required();
    verify->add_option("--n", verify_n, "largest size to verify")->capture_default_str();
    verify->add_option("--out", verify_out, "output path (default stdout)");

    // stats
    auto* stats = app.add_subcommand("stats", "statistic distributions and polynomial checks");
    int stats_n = 8;
    int stats_dmax = 3;
    std::string stats_out;
    std::string histogram_stat;
    stats->add_option("--n-max", stats_n, "largest n to sweep")->capture_default_str();
    stats->add_option("--d-max", stats_dmax, "largest right-descent count to check")
        ->capture_default_str();
    stats->add_option("--histogram", histogram_stat,
                      "emit one histogram instead: right-descents | left-descents | "
                      "right-ascents | left-ascents");
    stats->add_option("--out", stats_out, "output path (default stdout)");

    // render
    auto* render = app.add_subcommand("render", "render a GenRect JSON document as SVG");
    std::string render_path = "-";
    std::string render_out;
    int render_scale = 48;
    bool render_no_labels = false;
    bool render_diagonal = false;
    render->add_option("input", render_path, "GenRect JSON file (- for stdin)");
    render->add_option("--out", render_out, "output path (default stdout)");
    render->add_option("--scale", render_scale, "svg scale")->capture_default_str();
    render->add_flag("--no-labels", render_no_labels, "omit id labels");
    render->add_flag("--diagonal", render_diagonal, "overlay the diagonal");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*enumerate)
            return run_enumerate(engine, n_max, brute_k, threads, mem_cap, format, out_path,
                                 checkpoint_path);

        if (*map_cmd) {
            const grec::Permutation perm = parse_perm_argument(perm_text);
            const grec::GenRect g = grec::gamma(perm);
            if (emit == "json") {
                write_output(map_out, grec::to_json(g).dump(2) + "\n");
            } else if (emit == "svg") {
                grec::RenderOptions options{scale, !no_labels, with_diagonal};
                write_output(map_out, grec::render_svg(grec::realize(g), options));
            } else {
                throw std::runtime_error("unknown emit mode " + emit);
            }
            return 0;
        }

        if (*inverse) {
            const json doc = json::parse(read_input(inverse_path));
            const grec::GenRect g = grec::genrect_from_json(doc);
            write_output(inverse_out, grec::inverse_gamma(g).str() + "\n");
            return 0;
        }

        if (*verify) {
            std::string report;
            const int status = run_verify(suite, verify_n, &report);
            write_output(verify_out, report);
            return status;
        }

        if (*stats) {
            std::string csv;
            if (!histogram_stat.empty()) {
                grec::Statistic which;
                if (histogram_stat == "right-descents") which = grec::Statistic::right_descents;
                else if (histogram_stat == "left-descents") which = grec::Statistic::left_descents;
                else if (histogram_stat == "right-ascents") which = grec::Statistic::right_ascents;
                else if (histogram_stat == "left-ascents") which = grec::Statistic::left_ascents;
                else throw std::runtime_error("unknown statistic " + histogram_stat);
                csv = "value,count\n";
                for (const auto& [value, count] : grec::distribution(stats_n, which).counts)
                    csv += std::to_string(value) + "," + count.get_str() + "\n";
            } else {
                csv = "d,n,brute_count,formula_value,match\n";
                for (int d = 0; d <= stats_dmax; ++d) {
                    const grec::ConjectureReport report = grec::check_conjecture(d, 1, stats_n);
                    for (const auto& row : report.rows)
                        csv += std::to_string(d) + "," + std::to_string(row.n) + "," +
                               row.brute.get_str() + "," + row.formula.get_str() + "," +
                               (row.match ? "true" : "false") + "\n";
                }
            }
            write_output(stats_out, csv);
            return 0;
        }

        if (*render) {
            const json doc = json::parse(read_input(render_path));
            const grec::GenRect g = grec::genrect_from_json(doc);
            grec::RenderOptions options{render_scale, !render_no_labels, render_diagonal};
            write_output(render_out, grec::render_svg(grec::realize(g), options));
            return 0;
        }
    } catch (const grec::size_guard_error& error) {
        std::cerr << "size guard: " << error.what() << "\n";
        return 1;
    } catch (const grec::memory_cap_error& error) {
        std::cerr << "memory cap reached at level " << error.level_reached << ": " << error.what()
                  << "\n";
        return 1;
    } catch (const json::parse_error& error) {
        std::cerr << "JSON parse error: " << error.what() << "\n";
        return 1;
    } catch (const std::exception& error) {
        std::cerr << "error: " << error.what() << "\n";
        return 1;
    }
    return 0;
}

namespace {

json check_entry(const std::string& name, bool pass, const std::string& detail) {
    return json{{"name", name}, {"pass", pass}, {"detail", detail}};
}

int run_verify(const std::string& suite, int n_limit, std::string* report_out) {
    json checks = json::array();
    bool all_pass = true;
    auto record = [&](const std::string& name, bool pass, const std::string& detail) {
        checks.push_back(check_entry(name, pass, detail));
        all_pass = all_pass && pass;
    };

    if (suite == "bijection") {
        static const long table[] = {1, 2, 6, 24, 116, 642, 3938, 26194};
        for (int n = 1; n <= n_limit && n <= 8; ++n) {
            std::map<std::string, std::pair<grec::GenRect, int>> fibers;
            bool inverse_ok = true;
            grec::for_each_permutation(n, [&](const std::vector<int>& word) {
                const grec::Permutation perm(word);
                const grec::GenRect g = grec::gamma(perm);
                auto [it, fresh] = fibers.try_emplace(g.key(), g, 0);
                if (grec::is_k_clumped(perm, 2)) {
                    ++it->second.second;
                    inverse_ok = inverse_ok && grec::inverse_gamma(g) == perm;
                }
            });
            record("image-size n=" + std::to_string(n),
                   static_cast<long>(fibers.size()) == table[n - 1],
                   std::to_string(fibers.size()) + " distinct rectangulations");
            bool unique = true;
            for (const auto& [key, value] : fibers) unique = unique && value.second == 1;
            record("one 2-clumped preimage per fiber n=" + std::to_string(n), unique, "");
            record("inverse_gamma . gamma = id n=" + std::to_string(n), inverse_ok, "");
        }
    } else if (suite == "congruence") {
        for (int n = 2; n <= n_limit && n <= 7; ++n) {
            bool rho_ok = true;
            bool gamma_ok = true;
            bool fiber_ok = true;
            grec::for_each_permutation(n, [&](const std::vector<int>& word) {
                const grec::Permutation y(word);
                const grec::GenRect gy = grec::gamma(y);
                for (const auto& [x, move] : grec::covers_down(y)) {
                    rho_ok = rho_ok &&
                             ((grec::rho(x) == gy.diag()) == grec::rho_cover_equivalent(y, move));
                    gamma_ok = gamma_ok &&
                               ((grec::gamma(x) == gy) == grec::gamma_cover_equivalent(y, move));
                }
                if (n <= 7) {
                    fiber_ok =
                        fiber_ok &&
                        grec::fiber_gamma(gy) ==
                            grec::congruence_class(y, grec::CoverTest::gamma_test()).members;
                }
            });
            record("rho constant exactly on rho-equivalent covers n=" + std::to_string(n), rho_ok,
                   "");
            record("gamma constant exactly on gamma-equivalent covers n=" + std::to_string(n),
                   gamma_ok, "");
            record("fibers are congruence classes n=" + std::to_string(n), fiber_ok, "");
        }
    } else if (suite == "statistics") {
        for (int n = 1; n <= n_limit && n <= 7; ++n) {
            bool walls_ok = true;
            grec::for_each_permutation(n, [&](const std::vector<int>& word) {
                const grec::Permutation perm(word);
                const grec::DiagRect image = grec::rho(perm);
                int vertical = 0;
                int horizontal = 0;
                for (const grec::Wall& wall : image.walls())
                    (wall.orientation == grec::Orientation::vertical ? vertical : horizontal) += 1;
                const grec::PermStatistics stats = grec::statistics(perm);
                walls_ok = walls_ok && stats.left_ascents == vertical &&
                           stats.left_descents == horizontal;
            });
            record("left statistics count walls n=" + std::to_string(n), walls_ok, "");
        }
    } else if (suite == "roundtrip") {
        for (int n = 1; n <= n_limit && n <= 6; ++n) {
            bool ok = true;
            grec::for_each_permutation(n, [&](const std::vector<int>& word) {
                const grec::GenRect g = grec::gamma(grec::Permutation(word));
                const grec::Layout layout = grec::realize(g);
                ok = ok && grec::is_generic_tiling(layout.rects) && grec::extract(layout) == g;
            });
            record("extract . realize = id n=" + std::to_string(n), ok, "");
        }
    } else {
        throw std::runtime_error("unknown suite " + suite);
    }

    const json report = {{"suite", suite}, {"n", n_limit}, {"pass", all_pass}, {"checks", checks}};
    *report_out = report.dump(2) + "\n";
    return all_pass ? 0 : 1;
}

}  // namespace
