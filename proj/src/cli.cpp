/*
   Copyright 2026 hermw authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include "hermw/cli.hpp"

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <random>

#include <CLI11.hpp>

#include "hermw/float_roots.hpp"
#include "hermw/identities.hpp"
#include "hermw/poly_gcd.hpp"
#include "hermw/report.hpp"
#include "hermw/sturm.hpp"
#include "hermw/wronskian.hpp"
#include "hermw/zeros.hpp"

namespace hermw {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

struct CommandOutcome {
    Json report;
    bool all_ok = true;
};

/// Random matrix of polynomial entries for the Sylvester self-test;
/// deterministic for a fixed seed.
PolyMatrix random_poly_matrix(std::mt19937_64& rng, std::size_t size, int max_degree,
                              int coeff_bound) {
    std::uniform_int_distribution<int> coeff(-coeff_bound, coeff_bound);
    std::uniform_int_distribution<int> deg(0, max_degree);
    PolyMatrix m(size, size);
    for (std::size_t i = 0; i < size; ++i)
        for (std::size_t j = 0; j < size; ++j) {
            const int d = deg(rng);
            std::vector<Integer> c(static_cast<std::size_t>(d) + 1);
            for (auto& x : c) x = coeff(rng);
            m.at(i, j) = IntPolynomial(std::move(c));
        }
    return m;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact Hermite Wronskian computations and identity certificates"};
    app.require_subcommand(1);

    bool no_color = false;
    app.add_flag("--no-color", no_color, "disable ANSI colors in diagnostics");

    std::string set_text;
    int opt_p = 1, opt_q = 1, opt_n = 1, opt_k = 1;
    long long opt_index = 0, opt_n1 = 0, opt_n2 = 0;
    int max_element = 6, max_size = 3;
    unsigned par = 0;
    std::string out_path;
    bool csv = false;
    double tol = 1e-8;
    int random_count = 0, random_size = 4, random_degree = 2, random_coeff = 9;
    unsigned long long seed = 12345;
    std::size_t i0 = 1, i1 = 2, j0 = 1, j1 = 2;

    auto* cmd_omega = app.add_subcommand("omega", "Wronskian polynomial of an index set");
    cmd_omega->add_option("--set", set_text, "index set, e.g. 1,2,5 or S(2,3)")->required();

    auto* cmd_roots = app.add_subcommand("roots", "exact real-root summary of the Wronskian");
    cmd_roots->add_option("--set", set_text)->required();

    auto* cmd_certify = app.add_subcommand("certify", "zero-structure certificate");
    cmd_certify->add_option("--set", set_text)->required();

    auto* cmd_segment = app.add_subcommand("segment-check", "segment coprimality/simplicity certificates");
    cmd_segment->add_option("--p", opt_p)->required();
    cmd_segment->add_option("--q", opt_q)->required();

    auto* cmd_duality = app.add_subcommand("duality", "involution duality identity check");
    cmd_duality->add_option("--set", set_text)->required();

    auto* cmd_sylvester = app.add_subcommand("sylvester", "Sylvester determinant identity check");
    cmd_sylvester->add_option("--set", set_text, "check the Wronskian matrix of this set");
    cmd_sylvester->add_option("--random", random_count, "check N random polynomial matrices");
    cmd_sylvester->add_option("--size", random_size, "random matrix size");
    cmd_sylvester->add_option("--max-degree", random_degree, "random entry degree bound");
    cmd_sylvester->add_option("--coeff-bound", random_coeff, "random coefficient bound");
    cmd_sylvester->add_option("--seed", seed, "random seed");
    cmd_sylvester->add_option("--i0", i0, "first deleted row (1-based)");
    cmd_sylvester->add_option("--i1", i1, "second deleted row (1-based)");
    cmd_sylvester->add_option("--j0", j0, "first deleted column (1-based)");
    cmd_sylvester->add_option("--j1", j1, "second deleted column (1-based)");

    auto* cmd_ode = app.add_subcommand("ode", "second-order eigen-equation check");
    auto* ode_set = cmd_ode->add_option("--set", set_text, "index set (with --n)");
    auto* ode_n = cmd_ode->add_option("--n", opt_index, "spectrum index (with --set)");
    auto* ode_p = cmd_ode->add_option("--p", opt_p, "segment form start");
    auto* ode_q = cmd_ode->add_option("--q", opt_q, "segment form length minus one");
    ode_set->needs(ode_n);
    ode_n->needs(ode_set);
    ode_p->needs(ode_q);
    ode_q->needs(ode_p);
    ode_set->excludes(ode_p);

    auto* cmd_admissible = app.add_subcommand("admissible", "admissibility + Krein-Adler cross-check");
    cmd_admissible->add_option("--set", set_text)->required();

    auto* cmd_ks = app.add_subcommand("karlin-szego", "segment real-root count vs prediction");
    cmd_ks->add_option("--n", opt_n)->required();
    cmd_ks->add_option("--k", opt_k)->required();

    auto* cmd_scan = app.add_subcommand("scan", "certify all small index sets");
    cmd_scan->add_option("--max-element", max_element)->required();
    cmd_scan->add_option("--max-size", max_size)->required();
    cmd_scan->add_option("--par", par, "worker threads (default: logical CPUs)");
    cmd_scan->add_option("--out", out_path, "also write the report to this file");

    auto* cmd_cloud = app.add_subcommand("root-cloud", "float complex roots of the Wronskian");
    cmd_cloud->add_option("--set", set_text)->required();
    cmd_cloud->add_flag("--csv", csv, "emit CSV (re,im) instead of JSON");

    auto* cmd_ortho = app.add_subcommand("orthogonality", "numeric orthogonality of a spectrum pair");
    cmd_ortho->add_option("--set", set_text)->required();
    cmd_ortho->add_option("--n1", opt_n1)->required();
    cmd_ortho->add_option("--n2", opt_n2)->required();
    cmd_ortho->add_option("--tol", tol, "relative tolerance");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n" << app.help();
        return 2;
    }

    const bool color = !no_color && std::getenv("NO_COLOR") == nullptr;
    auto diagnose = [&](const std::string& message) {
        if (color)
            err << "\x1b[31merror:\x1b[0m " << message << "\n";
        else
            err << "error: " << message << "\n";
    };

    try {
        CommandOutcome outcome;
        const auto t_start = Clock::now();
        std::vector<double> item_seconds;

        if (cmd_omega->parsed()) {
            const IndexSet f = parse_set(set_text);
            const WronskianResult w = wronskian(f);
            item_seconds.push_back(seconds_since(t_start));
            const bool degree_ok = w.polynomial.degree() == w.predicted_degree;
            outcome.all_ok = degree_ok;
            outcome.report = make_report(
                "omega", Json{{"set", to_json(f)}},
                Json::array({Json{{"set", to_json(f)},
                                  {"predicted_degree", w.predicted_degree},
                                  {"degree_matches_prediction", degree_ok},
                                  {"polynomial", to_json(w.polynomial)}}}),
                item_seconds);
        } else if (cmd_roots->parsed()) {
            const IndexSet f = parse_set(set_text);
            const ZeroCertificate c = certify(f);
            item_seconds.push_back(seconds_since(t_start));
            outcome.report = make_report(
                "roots", Json{{"set", to_json(f)}},
                Json::array({Json{{"set", to_json(f)},
                                  {"degree", c.degree},
                                  {"origin_multiplicity", c.origin_multiplicity},
                                  {"real_root_count", c.real_root_count},
                                  {"squarefree", c.squarefree}}}),
                item_seconds);
        } else if (cmd_certify->parsed()) {
            const IndexSet f = parse_set(set_text);
            const ZeroCertificate c = certify(f);
            item_seconds.push_back(seconds_since(t_start));
            outcome.all_ok = c.veselov_ok;
            outcome.report = make_report("certify", Json{{"set", to_json(f)}},
                                         Json::array({to_json(c)}), item_seconds);
        } else if (cmd_segment->parsed()) {
            const SegmentCertificate c = certify_segment(opt_p, opt_q);
            item_seconds.push_back(seconds_since(t_start));
            outcome.all_ok = c.a1_coprime && c.a2_squarefree && c.a3_coprime;
            outcome.report = make_report("segment-check", Json{{"p", opt_p}, {"q", opt_q}},
                                         Json::array({to_json(c)}), item_seconds);
        } else if (cmd_duality->parsed()) {
            const IndexSet f = parse_set(set_text);
            const IdentityVerdict v = duality_check(f);
            item_seconds.push_back(seconds_since(t_start));
            outcome.all_ok = v.holds_exactly;
            outcome.report = make_report("duality", Json{{"set", to_json(f)}},
                                         Json::array({to_json(v)}), item_seconds);
        } else if (cmd_sylvester->parsed()) {
            Json results = Json::array();
            Json inputs;
            if (random_count > 0) {
                if (random_size < 2)
                    throw std::invalid_argument("sylvester --size must be at least 2");
                inputs = Json{{"random", random_count}, {"size", random_size},
                              {"max_degree", random_degree}, {"coeff_bound", random_coeff},
                              {"seed", seed}};
                std::mt19937_64 rng(seed);
                std::uniform_int_distribution<std::size_t> pick(1, static_cast<std::size_t>(random_size));
                for (int r = 0; r < random_count; ++r) {
                    const auto t_item = Clock::now();
                    const PolyMatrix m =
                        random_poly_matrix(rng, static_cast<std::size_t>(random_size),
                                           random_degree, random_coeff);
                    std::size_t a = pick(rng), b = pick(rng);
                    while (b == a) b = pick(rng);
                    if (a > b) std::swap(a, b);
                    std::size_t c = pick(rng), d = pick(rng);
                    while (d == c) d = pick(rng);
                    if (c > d) std::swap(c, d);
                    const IdentityVerdict v = sylvester_check(m, a, b, c, d);
                    outcome.all_ok = outcome.all_ok && v.holds_exactly;
                    results.push_back(to_json(v));
                    item_seconds.push_back(seconds_since(t_item));
                }
            } else {
                if (set_text.empty())
                    throw std::invalid_argument("sylvester needs --set or --random N");
                const IndexSet f = parse_set(set_text);
                inputs = Json{{"set", to_json(f)}, {"i0", i0}, {"i1", i1}, {"j0", j0}, {"j1", j1}};
                const IdentityVerdict v = sylvester_check(wronskian_matrix(f), i0, i1, j0, j1);
                outcome.all_ok = v.holds_exactly;
                results.push_back(to_json(v));
                item_seconds.push_back(seconds_since(t_start));
            }
            outcome.report = make_report("sylvester", std::move(inputs), std::move(results),
                                         item_seconds);
        } else if (cmd_ode->parsed()) {
            IdentityVerdict v;
            Json inputs;
            if (*ode_set) {
                const IndexSet f = parse_set(set_text);
                v = eigen_ode_check(f, opt_index);
                inputs = Json{{"set", to_json(f)}, {"n", opt_index}};
            } else if (*ode_p) {
                v = segment_ode_check(opt_p, opt_q);
                inputs = Json{{"p", opt_p}, {"q", opt_q}};
            } else {
                throw std::invalid_argument("ode needs either --set/--n or --p/--q");
            }
            item_seconds.push_back(seconds_since(t_start));
            outcome.all_ok = v.holds_exactly;
            outcome.report =
                make_report("ode", std::move(inputs), Json::array({to_json(v)}), item_seconds);
        } else if (cmd_admissible->parsed()) {
            const IndexSet f = parse_set(set_text);
            const bool adm = admissible(f);
            const IdentityVerdict v = krein_adler_check(f);
            item_seconds.push_back(seconds_since(t_start));
            outcome.all_ok = v.holds_exactly;
            outcome.report = make_report(
                "admissible", Json{{"set", to_json(f)}},
                Json::array({Json{{"set", to_json(f)}, {"admissible", adm},
                                  {"krein_adler", to_json(v)}}}),
                item_seconds);
        } else if (cmd_ks->parsed()) {
            const SegmentRootCount c = karlin_szego_count(opt_n, opt_k);
            item_seconds.push_back(seconds_since(t_start));
            outcome.all_ok = c.actual == c.expected && c.degree == c.expected_degree && c.squarefree;
            outcome.report = make_report("karlin-szego", Json{{"n", opt_n}, {"k", opt_k}},
                                         Json::array({to_json(c)}), item_seconds);
        } else if (cmd_scan->parsed()) {
            const std::vector<ZeroCertificate> certs = veselov_scan(max_element, max_size, par);
            item_seconds.push_back(seconds_since(t_start));
            Json list = Json::array();
            Json counterexamples = Json::array();
            for (const auto& c : certs) {
                outcome.all_ok = outcome.all_ok && c.veselov_ok;
                if (!c.veselov_ok) counterexamples.push_back(to_json(c.set));
                list.push_back(to_json(c));
            }
            outcome.report = make_report(
                "scan",
                Json{{"max_element", max_element}, {"max_size", max_size}, {"par", par}},
                Json::array({Json{{"count", certs.size()},
                                  {"all_veselov_ok", outcome.all_ok},
                                  {"counterexample_candidates", std::move(counterexamples)},
                                  {"certificates", std::move(list)}}}),
                item_seconds);
            if (!out_path.empty()) {
                std::ofstream file(out_path);
                if (!file) throw std::invalid_argument("cannot open output file " + out_path);
                file << outcome.report.dump(2) << "\n";
            }
        } else if (cmd_cloud->parsed()) {
            const IndexSet f = parse_set(set_text);
            const auto roots = root_cloud(f);
            item_seconds.push_back(seconds_since(t_start));
            if (csv) {
                out << root_cloud_csv(roots);
                return 0;
            }
            Json arr = Json::array();
            for (const auto& z : roots) arr.push_back(to_json(z));
            outcome.report = make_report("root-cloud", Json{{"set", to_json(f)}},
                                         Json::array({Json{{"set", to_json(f)},
                                                           {"count", roots.size()},
                                                           {"roots", std::move(arr)}}}),
                                         item_seconds);
        } else if (cmd_ortho->parsed()) {
            const IndexSet f = parse_set(set_text);
            const OrthogonalityResult r = orthogonality_numeric_check(f, opt_n1, opt_n2, tol);
            item_seconds.push_back(seconds_since(t_start));
            outcome.all_ok = r.orthogonal;
            outcome.report = make_report(
                "orthogonality",
                Json{{"set", to_json(f)}, {"n1", opt_n1}, {"n2", opt_n2}, {"tolerance", tol}},
                Json::array({to_json(r)}), item_seconds);
        }

        out << outcome.report.dump(2) << "\n";
        return outcome.all_ok ? 0 : 1;
    } catch (const std::invalid_argument& e) {
        diagnose(e.what());
        return 2;
    } catch (const std::domain_error& e) {
        diagnose(e.what());
        return 2;
    } catch (const std::exception& e) {
        diagnose(std::string("internal failure: ") + e.what());
        return 2;
    }
}

}  // namespace hermw
