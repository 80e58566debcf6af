#include <chrono>
#include <cstdint>
#include <functional>
#include <future>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "fgl/io.hpp"
#include "fgl/pseq.hpp"

namespace {

using fgl::io::json;

struct Outcome {
    json result;
    bool positive = true;
};

json witness_json(const fgl::CongruenceWitness& w) {
    return json{{"n", w.n}, {"ord", w.actual}, {"required", w.required}};
}

json verdict_json(const fgl::CongruenceVerdict& v, const std::string& pass_word) {
    if (v.pass) return json{{"verdict", pass_word + "-up-to-" + std::to_string(v.bound)}};
    json out{{"verdict", "non-integral"}};
    if (v.witness) out["witness"] = witness_json(*v.witness);
    return out;
}

fgl::CoeffSeq load_coeffs(const std::string& path) {
    return fgl::io::parse_coeff_seq(fgl::io::load_file(path));
}

int emit(const std::string& command, const json& inputs, const Outcome& out,
         std::chrono::steady_clock::time_point start) {
    const auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                             std::chrono::steady_clock::now() - start)
                             .count();
    json report{{"schema", "fgl-report/1"},
                {"command", command},
                {"inputs", inputs},
                {"result", out.result},
                {"elapsed_ms", elapsed}};
    std::cout << report.dump(2) << "\n";
    return out.positive ? 0 : 1;
}

std::int64_t least_prime_in_class(std::int64_t r, std::int64_t N) {
    for (std::int64_t p = N + 1;; ++p) {
        if (p % N != r) continue;
        bool prime = p >= 2;
        for (std::int64_t d = 2; d * d <= p; ++d)
            if (p % d == 0) {
                prime = false;
                break;
            }
        if (prime) return p;
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"fglab: integrality, height and characteristic polynomials of "
                 "one-dimensional formal group laws"};
    app.require_subcommand(1);

    std::string coeffs_path, factor_path, laurent_path, weights_path, at_string;
    std::int64_t prime_in = 0, bound = 24;
    int precision = 2, smax = 6, inf_bound = 3, jobs = 1;
    bool strong = false, k3 = false, table = false, verify = false;

    auto* cmd_gamma = app.add_subcommand("gamma", "p-adic gamma value at a rational argument");
    cmd_gamma->add_option("--prime", prime_in)->required();
    cmd_gamma->add_option("--at", at_string, "argument, e.g. 1/2")->required();
    cmd_gamma->add_option("--precision", precision);

    auto* cmd_pseq = app.add_subcommand("pseq", "p-sequence of a coefficient sequence");
    cmd_pseq->add_option("--prime", prime_in)->required();
    cmd_pseq->add_option("--coeffs", coeffs_path)->required();
    cmd_pseq->add_option("--bound", bound);

    auto* cmd_check = app.add_subcommand("check", "integrality criterion up to a bound");
    cmd_check->add_option("--prime", prime_in)->required();
    cmd_check->add_option("--coeffs", coeffs_path)->required();
    cmd_check->add_option("--bound", bound);
    cmd_check->add_flag("--strong", strong, "check ord(c_n) >= l(n)-1 instead");

    auto* cmd_height = app.add_subcommand("height", "height from the p-sequence");
    cmd_height->add_option("--prime", prime_in)->required();
    cmd_height->add_option("--coeffs", coeffs_path)->required();
    cmd_height->add_option("--smax", smax);

    auto* cmd_charpoly = app.add_subcommand("charpoly", "characteristic polynomial mod p^k");
    cmd_charpoly->add_option("--prime", prime_in)->required();
    cmd_charpoly->add_option("--coeffs", coeffs_path)->required();
    cmd_charpoly->add_option("--precision", precision);
    cmd_charpoly->add_option("--smax", smax);

    auto* cmd_lfun = app.add_subcommand("lfun", "formal group law of an Euler factor");
    cmd_lfun->add_option("--factor", factor_path)->required();
    cmd_lfun->add_option("--precision", precision);
    cmd_lfun->add_option("--bound", bound);

    auto* cmd_am = app.add_subcommand("am", "constant-term sequences of Laurent powers");
    cmd_am->add_option("--laurent", laurent_path);
    cmd_am->add_flag("--k3", k3, "the K3 double-covering example");
    cmd_am->add_option("--prime", prime_in)->required();
    cmd_am->add_option("--bound", bound);
    cmd_am->add_option("--precision", precision);
    cmd_am->add_option("--inf-bound", inf_bound);

    auto* cmd_hg = app.add_subcommand("hg", "hypergeometric formal group laws");
    cmd_hg->add_option("--weights", weights_path)->required();
    cmd_hg->add_flag("--table", table, "height table per residue class mod N");
    cmd_hg->add_flag("--verify", verify, "sample one prime per class and re-classify");
    cmd_hg->add_option("--jobs", jobs, "parallel classification jobs");
    cmd_hg->add_option("--prime", prime_in);
    cmd_hg->add_option("--precision", precision);

    CLI11_PARSE(app, argc, argv);
    const auto start = std::chrono::steady_clock::now();

    try {
        if (cmd_gamma->parsed()) {
            fgl::Prime p(prime_in);
            const fgl::Rat x = fgl::io::parse_rational(json(at_string));
            Outcome out;
            out.result["gamma"] = fgl::io::residue_json(fgl::gamma_p(x, p, precision));
            return emit("gamma", {{"prime", prime_in}, {"at", at_string}, {"precision", precision}},
                        out, start);
        }
        if (cmd_pseq->parsed()) {
            fgl::Prime p(prime_in);
            const auto b = load_coeffs(coeffs_path);
            const auto c = fgl::p_sequence(b, p, static_cast<std::size_t>(bound));
            Outcome out;
            json values = json::array();
            for (const auto& v : c.c) values.push_back(fgl::io::rational_string(v));
            out.result["c"] = values;
            return emit("pseq", {{"prime", prime_in}, {"coeffs", coeffs_path}, {"bound", bound}},
                        out, start);
        }
        if (cmd_check->parsed()) {
            fgl::Prime p(prime_in);
            const auto b = load_coeffs(coeffs_path);
            const auto v = strong ? fgl::check_strong_congruence(b, p, bound)
                                  : fgl::check_integrality(b, p, bound);
            Outcome out{verdict_json(v, strong ? "strong-congruence" : "integral"), v.pass};
            return emit("check",
                        {{"prime", prime_in},
                         {"coeffs", coeffs_path},
                         {"bound", bound},
                         {"strong", strong}},
                        out, start);
        }
        if (cmd_height->parsed()) {
            fgl::Prime p(prime_in);
            const auto b = load_coeffs(coeffs_path);
            const fgl::Int need = p.pow(smax) - 1;
            if (need >= fgl::Int(b.size()))
                throw std::invalid_argument("height: coefficient file too short for --smax");
            const auto c = fgl::p_sequence(b, p, static_cast<std::size_t>(need));
            Outcome out;
            out.result["height"] = fgl::io::height_json(fgl::height(c, smax));
            return emit("height", {{"prime", prime_in}, {"coeffs", coeffs_path}, {"smax", smax}},
                        out, start);
        }
        if (cmd_charpoly->parsed()) {
            fgl::Prime p(prime_in);
            const auto b = load_coeffs(coeffs_path);
            const fgl::Int need_h = p.pow(smax) - 1;
            if (need_h >= fgl::Int(b.size()))
                throw std::invalid_argument("charpoly: coefficient file too short for --smax");
            const auto c = fgl::p_sequence(b, p, static_cast<std::size_t>(need_h));
            const fgl::Height h = fgl::height(c, smax);
            Outcome out;
            if (!h.is_finite()) {
                fgl::CharPoly psi{p, h, precision, {}, {}};
                out.result = fgl::io::charpoly_json(psi);
            } else {
                const fgl::Int need = p.pow(precision * h.value + h.value - 1) - 1;
                if (need >= fgl::Int(b.size()))
                    throw std::invalid_argument(
                        "charpoly: need coefficients up to index p^{kh+h-1}-1 = " + need.str());
                out.result = fgl::io::charpoly_json(fgl::charpoly_matrix(b, p, h.value, precision));
            }
            return emit("charpoly",
                        {{"prime", prime_in},
                         {"coeffs", coeffs_path},
                         {"precision", precision},
                         {"smax", smax}},
                        out, start);
        }
        if (cmd_lfun->parsed()) {
            const auto f = fgl::io::parse_euler_factor(fgl::io::load_file(factor_path));
            Outcome out;
            const bool integral = fgl::lfun_integrality(f);
            out.result["integral"] = integral;
            out.positive = integral;
            if (integral) {
                const auto Q = fgl::q_poly(f);
                json qj = json::array();
                for (const auto& qc : Q.q) qj.push_back(fgl::io::rational_string(qc));
                out.result["Q"] = qj;
                out.result["height"] = fgl::io::height_json(fgl::lfun_height(f));
                out.result["charpoly"] = fgl::io::charpoly_json(fgl::eisenstein_factor(Q, precision));
                const auto structure = fgl::lfun_pseq_structure(f, bound);
                out.result["pseq_structure"] =
                    structure.pass ? json{{"pass", true}}
                                   : json{{"pass", false},
                                          {"index", structure.index},
                                          {"detail", structure.detail}};
                out.positive = structure.pass;
            }
            return emit("lfun",
                        {{"factor", factor_path}, {"precision", precision}, {"bound", bound}},
                        out, start);
        }
        if (cmd_am->parsed()) {
            fgl::Prime p(prime_in);
            Outcome out;
            if (k3) {
                const auto rep = fgl::k3_invariants(p, precision, inf_bound);
                out.result["height"] = fgl::io::height_json(rep.height);
                if (rep.alpha) out.result["alpha"] = fgl::io::residue_json(*rep.alpha);
                if (rep.a_p) out.result["a_p"] = fgl::io::residue_json(*rep.a_p);
            } else {
                if (laurent_path.empty())
                    throw std::invalid_argument("am: provide --laurent FILE or --k3");
                const auto V = fgl::io::parse_laurent(fgl::io::load_file(laurent_path));
                const auto w = fgl::newton_interior(V);
                const auto b = fgl::am_coeffs(V, w, static_cast<std::size_t>(bound));
                out.result["interior_point"] = w;
                const auto strong_v = fgl::check_strong_congruence(b, p, bound);
                const auto weak_v = fgl::check_integrality(b, p, bound);
                out.result["strong_congruence"] = verdict_json(strong_v, "strong-congruence");
                out.result["integrality"] = verdict_json(weak_v, "integral");
                out.positive = strong_v.pass && weak_v.pass;
            }
            return emit("am",
                        {{"prime", prime_in},
                         {"laurent", laurent_path},
                         {"k3", k3},
                         {"bound", bound},
                         {"precision", precision}},
                        out, start);
        }
        if (cmd_hg->parsed()) {
            const auto w = fgl::io::parse_weights(fgl::io::load_file(weights_path));
            Outcome out;
            if (table) {
                const auto t = fgl::hg_residue_table(w);
                json tj;
                for (const auto& [r, e] : t) {
                    json entry;
                    if (!e.integral)
                        entry = "non-integral";
                    else if (e.height)
                        entry = *e.height;
                    else
                        entry = "infinite";
                    tj[std::to_string(r)] = entry;
                }
                out.result["modulus"] = w.modulus();
                out.result["table"] = tj;
                if (verify) {
                    std::vector<std::pair<std::int64_t, std::int64_t>> classes;
                    for (const auto& [r, e] : t)
                        classes.emplace_back(r, least_prime_in_class(r, w.modulus()));
                    std::vector<std::future<json>> futs;
                    std::size_t next = 0;
                    json checks;
                    while (next < classes.size()) {
                        futs.clear();
                        for (int j = 0; j < jobs && next < classes.size(); ++j, ++next) {
                            const auto [r, p] = classes[next];
                            futs.push_back(std::async(std::launch::async, [&w, r = r, p = p]() {
                                const auto rep = fgl::hg_classify(w, fgl::Prime(p), 1);
                                json e{{"prime", p}, {"integral", rep.integral}};
                                if (rep.height) e["height"] = fgl::io::height_json(*rep.height);
                                return json{{"class", r}, {"check", e}};
                            }));
                        }
                        for (auto& fu : futs) {
                            json r = fu.get();
                            checks[r["class"].dump()] = r["check"];
                        }
                    }
                    out.result["sampled_primes"] = checks;
                }
            } else {
                if (prime_in == 0)
                    throw std::invalid_argument("hg: provide --prime or --table");
                const auto rep = fgl::hg_classify(w, fgl::Prime(prime_in), precision);
                out.result["modulus"] = rep.modulus;
                out.result["order"] = rep.order;
                out.result["m"] = rep.m;
                json lambdas = json::array();
                for (const auto& l : rep.lambda) lambdas.push_back(l.str());
                out.result["lambda"] = lambdas;
                out.result["integral"] = rep.integral;
                if (rep.height) out.result["height"] = fgl::io::height_json(*rep.height);
                if (rep.xi) out.result["xi"] = fgl::io::residue_json(*rep.xi);
                out.positive = rep.integral;
            }
            return emit("hg",
                        {{"weights", weights_path},
                         {"table", table},
                         {"prime", prime_in},
                         {"precision", precision}},
                        out, start);
        }
    } catch (const fgl::InconsistencyError& e) {
        std::cout << json{{"error", e.what()}, {"kind", "inconsistency"}}.dump(2) << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cout << json{{"error", e.what()}}.dump(2) << "\n";
        return 2;
    }
    return 2;
}
