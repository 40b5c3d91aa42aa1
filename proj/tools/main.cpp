// Verification and ideal-calculus command line front end.
//
//   cayley verify p2|two-points|section|zero-dim|richardson|g36 [options]
//   cayley gb|saturate|hilbert|radical0 FILE [options]
//   cayley pluecker --grassmann d,m
//
// Ideal files: a `ring: VARS over Q|Fp` header, then one polynomial per
// line. Verify subcommands print reports (`--format json|text`) and exit
// nonzero when a claim fails. CAYLEY_THREADS caps worker threads.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "cayley/checks.hpp"
#include "cayley/grassmann.hpp"
#include "cayley/hilbert.hpp"
#include "cayley/ideal_io.hpp"
#include "cayley/version.hpp"
#include "cayley/zero_dim.hpp"

namespace {

using namespace cayley;

struct OutputOptions {
    std::string format = "text";
    bool no_timings = false;
};

int emit_report(const Report& rep, const OutputOptions& out) {
    if (out.format == "json")
        std::cout << rep.render_json(!out.no_timings);
    else
        std::cout << rep.render_text(!out.no_timings);
    return rep.passed() ? 0 : 1;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

std::vector<std::uint64_t> parse_primes(const std::string& csv) {
    std::vector<std::uint64_t> out;
    std::istringstream in(csv);
    std::string tok;
    while (std::getline(in, tok, ','))
        if (!tok.empty()) out.push_back(std::stoull(tok));
    return out;
}

std::pair<long, long> parse_window(const std::string& s) {
    auto dots = s.find("..");
    if (dots == std::string::npos) throw Error("degree window must look like LO..HI");
    return {std::stol(s.substr(0, dots)), std::stol(s.substr(dots + 2))};
}

MonomialOrder parse_order(const std::string& name) {
    if (name == "grevlex") return MonomialOrder::grevlex();
    if (name == "lex") return MonomialOrder::lex();
    throw Error("unknown order " + name);
}

template <class Fn>
int with_ideal_file(const std::string& path, Fn&& fn) {
    auto data = parse_ideal_file(read_file(path));
    if (data.rationals) {
        auto [ring, polys] = materialize_ideal_file(data, Rationals{});
        return fn(ring, polys);
    }
    auto [ring, polys] = materialize_ideal_file(data, PrimeField(data.prime));
    return fn(ring, polys);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact commutative algebra toolkit"};
    app.set_version_flag("--version", std::string(cayley::kVersion));
    app.require_subcommand(1);

    OutputOptions out;

    // ---- verify ----
    auto* verify = app.add_subcommand("verify", "run a built-in verification");
    verify->require_subcommand(1);
    verify->add_option("--format", out.format, "text|json")->check(CLI::IsMember({"text", "json"}));
    verify->add_flag("--no-timings", out.no_timings, "omit wall-clock timings from the report");

    std::string window = "1..6";
    bool perturb = false;
    auto* p2 = verify->add_subcommand("p2", "Koszul rows and projection diagram over P^2");
    p2->add_option("--degree-window", window, "internal degree window LO..HI");
    p2->add_flag("--perturb-sign", perturb, "test hook: flip one projection sign");

    std::string tp_primes = "2,3,5,7";
    auto* two = verify->add_subcommand("two-points", "the two-point intersection on G_{2,4}");
    two->add_option("--primes", tp_primes, "comma-separated primes");

    int sec_m = 4;
    std::string sec_primes = "2,3,5";
    auto* sec = verify->add_subcommand("section", "chart section: jacobian rank and multiplicity");
    sec->add_option("--m", sec_m, "Grassmannian G_{2,m}")->required();
    sec->add_option("--primes", sec_primes, "comma-separated primes");

    int zd_m = 4;
    std::string zd_primes = "2,3,5,7";
    auto* zd = verify->add_subcommand("zero-dim", "zero-dimensionality and degree of X ∩ V");
    zd->add_option("--m", zd_m, "Grassmannian G_{2,m}")->required();
    zd->add_option("--primes", zd_primes, "comma-separated primes");

    int rich_m = 4;
    auto* rich = verify->add_subcommand("richardson", "Schubert union decomposition");
    rich->add_option("--m", rich_m, "Grassmannian G_{2,m}")->required();

    std::uint64_t g36_prime = 101;
    auto* g36 = verify->add_subcommand("g36", "non-reducedness search on G_{3,6}");
    g36->add_option("--prime", g36_prime, "verification prime (> scheme degree)");

    // ---- generic ideal utilities ----
    std::string file, by_file, order_name = "grevlex", grassmann_spec, field_spec = "Q";
    auto* gb_cmd = app.add_subcommand("gb", "reduced Groebner basis of an ideal file");
    gb_cmd->add_option("file", file, "ideal file")->required();
    gb_cmd->add_option("--order", order_name, "grevlex|lex");

    auto* sat_cmd = app.add_subcommand("saturate", "saturate an ideal file");
    sat_cmd->add_option("file", file, "ideal file")->required();
    sat_cmd->add_option("--by", by_file, "ideal file to saturate by (default: all variables)");

    auto* hil_cmd = app.add_subcommand("hilbert", "Hilbert numerator, projective dimension, degree");
    hil_cmd->add_option("file", file, "ideal file")->required();

    auto* rad_cmd = app.add_subcommand("radical0", "radical of a zero-dimensional affine ideal");
    rad_cmd->add_option("file", file, "ideal file")->required();

    auto* plk_cmd = app.add_subcommand("pluecker", "print a Pluecker ideal as an ideal file");
    plk_cmd->add_option("--grassmann", grassmann_spec, "d,m")->required();
    plk_cmd->add_option("--field", field_spec, "Q or Fp (e.g. F7)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (p2->parsed()) {
            P2Options o;
            std::tie(o.degree_lo, o.degree_hi) = parse_window(window);
            o.perturb_sign = perturb;
            return emit_report(verify_p2(o), out);
        }
        if (two->parsed()) return emit_report(verify_two_points({parse_primes(tp_primes)}), out);
        if (sec->parsed()) return emit_report(verify_section({sec_m, parse_primes(sec_primes)}), out);
        if (zd->parsed()) return emit_report(verify_zero_dim({zd_m, parse_primes(zd_primes)}), out);
        if (rich->parsed()) return emit_report(verify_richardson({rich_m}), out);
        if (g36->parsed()) return emit_report(search_g36({g36_prime}), out);

        if (gb_cmd->parsed()) {
            auto order = parse_order(order_name);
            return with_ideal_file(file, [&](auto ring, auto& polys) {
                auto gb = buchberger(polys, order);
                std::cout << write_ideal_file(ring, gb.elements);
                return 0;
            });
        }
        if (sat_cmd->parsed()) {
            return with_ideal_file(file, [&](auto ring, auto& polys) {
                using F = typename std::decay_t<decltype(*ring)>::Field;
                Ideal<F> ideal(ring, polys);
                Ideal<F> by = irrelevant_ideal(ring);
                if (!by_file.empty()) {
                    auto data = parse_ideal_file(read_file(by_file));
                    auto [ring2, polys2] = materialize_ideal_file(data, ring->field());
                    if (!same_ring(ring, ring2)) throw Error("saturating ideal lives in a different ring");
                    by = Ideal<F>(ring, polys2);
                }
                auto sat = saturate(ideal, by);
                std::cout << write_ideal_file(ring, sat.groebner().elements);
                return 0;
            });
        }
        if (hil_cmd->parsed()) {
            return with_ideal_file(file, [&](auto ring, auto& polys) {
                using F = typename std::decay_t<decltype(*ring)>::Field;
                auto hd = hilbert_data(Ideal<F>(ring, polys));
                std::string num;
                for (std::size_t i = 0; i < hd.numerator.size(); ++i) {
                    const auto& c = hd.numerator[i];
                    if (c == 0) continue;
                    std::string mono = i == 0 ? "1" : (i == 1 ? "t" : "t^" + std::to_string(i));
                    std::string abs = mpz_class(abs(c)).get_str();
                    if (num.empty())
                        num += (c < 0 ? "-" : "");
                    else
                        num += (c < 0 ? " - " : " + ");
                    num += (abs == "1" && i > 0) ? mono : (i == 0 ? abs : abs + "*" + mono);
                }
                if (num.empty()) num = "0";
                std::cout << "numerator: " << num << "\n";
                std::cout << "projdim: " << hd.proj_dim << "\n";
                std::cout << "degree: " << hd.degree << "\n";
                return 0;
            });
        }
        if (rad_cmd->parsed()) {
            return with_ideal_file(file, [&](auto ring, auto& polys) {
                using F = typename std::decay_t<decltype(*ring)>::Field;
                auto rad = zero_dim_radical(Ideal<F>(ring, polys));
                std::cout << write_ideal_file(ring, rad.groebner().elements);
                return 0;
            });
        }
        if (plk_cmd->parsed()) {
            auto comma = grassmann_spec.find(',');
            if (comma == std::string::npos) throw Error("--grassmann expects d,m");
            int d = std::stoi(grassmann_spec.substr(0, comma));
            int m = std::stoi(grassmann_spec.substr(comma + 1));
            if (field_spec == "Q") {
                GrassmannContext<Rationals> ctx(d, m, Rationals{});
                auto X = pluecker_ideal(ctx);
                std::cout << write_ideal_file(ctx.ring(), X.gens());
            } else if (!field_spec.empty() && field_spec[0] == 'F') {
                GrassmannContext<PrimeField> ctx(d, m, PrimeField(std::stoull(field_spec.substr(1))));
                auto X = pluecker_ideal(ctx);
                std::cout << write_ideal_file(ctx.ring(), X.gens());
            } else {
                throw Error("--field expects Q or Fp");
            }
            return 0;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
