#pragma once

#include <algorithm>
#include <cstddef>
#include <fstream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "a1weyl/json_io.hpp"

// Command-line front end. Arguments that look like @path are read from that
// file, everything else is inline JSON. Exit codes: 0 success, 1 a
// verification subcommand found a disagreement, 2 malformed input.

namespace a1weyl {

namespace cli_detail {

inline std::string read_argument(const std::string& raw) {
    if (raw.empty() || raw.front() != '@') return raw;
    std::ifstream in(raw.substr(1), std::ios::binary);
    if (!in) throw std::invalid_argument("cannot read input file: " + raw.substr(1));
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

inline nlohmann::json parse_json_argument(const std::string& raw) {
    return nlohmann::json::parse(read_argument(raw));
}

inline void require_cli_nullity(std::size_t actual, std::size_t expected, const char* what) {
    if (actual != expected)
        throw std::invalid_argument(std::string(what) + " has nullity " + std::to_string(actual) +
                                    " but --nullity is " + std::to_string(expected));
}

inline WeylElement element_from_arg(const std::string& raw, std::size_t nullity) {
    WeylElement w = parse_element(parse_json_argument(raw));
    require_cli_nullity(w.nullity(), nullity, "element");
    return w;
}

inline RootVector root_from_arg(const std::string& raw, std::size_t nullity) {
    RootVector a = parse_root(parse_json_argument(raw));
    require_cli_nullity(a.nullity(), nullity, "root");
    return a;
}

inline std::vector<RootVector> root_list_from_arg(const std::string& raw, std::size_t nullity) {
    std::vector<RootVector> roots = parse_root_list(parse_json_argument(raw));
    for (const auto& a : roots) require_cli_nullity(a.nullity(), nullity, "root");
    return roots;
}

inline RootBasis basis_from_arg(const std::string& raw, std::size_t nullity) {
    return RootBasis(root_list_from_arg(raw, nullity));
}

inline void emit(const std::string& output_path, std::ostream& out, const std::string& text) {
    if (output_path.empty()) {
        out << text;
        return;
    }
    std::ofstream file(output_path, std::ios::binary);
    if (!file) throw std::invalid_argument("cannot open output file: " + output_path);
    file << text;
}

}  // namespace cli_detail

inline int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    using cli_detail::emit;

    CLI::App app{"exact arithmetic in the Weyl groups of extended affine root systems of type A1"};
    app.require_subcommand(1);
    int exit_code = 0;

    struct CommonOpts {
        std::size_t nullity = 1;
        std::string output;
        std::string format = "json";
    };
    auto add_common = [](CLI::App* cmd, CommonOpts& opts, bool with_format) {
        cmd->add_option("--nullity", opts.nullity, "ambient nullity (number of sigma coordinates)")
            ->required()
            ->check(CLI::PositiveNumber);
        cmd->add_option("--output", opts.output, "write the result to this file instead of stdout");
        if (with_format)
            cmd->add_option("--format", opts.format, "output format")
                ->check(CLI::IsMember({"json", "csv"}));
    };

    // length
    CommonOpts length_opts;
    std::string length_arg;
    auto* length_cmd = app.add_subcommand("length", "Pi0-length of an element");
    add_common(length_cmd, length_opts, false);
    length_cmd->add_option("element", length_arg, "element JSON or @file")->required();
    length_cmd->callback([&] {
        const WeylElement w = cli_detail::element_from_arg(length_arg, length_opts.nullity);
        emit(length_opts.output, out, std::to_string(length_pi0(w)) + "\n");
    });

    // word
    CommonOpts word_opts;
    std::string word_arg;
    auto* word_cmd = app.add_subcommand("word", "reduced Pi0-word of an element");
    add_common(word_cmd, word_opts, false);
    word_cmd->add_option("element", word_arg, "element JSON or @file")->required();
    word_cmd->callback([&] {
        const WeylElement w = cli_detail::element_from_arg(word_arg, word_opts.nullity);
        emit(word_opts.output, out, nlohmann::json(reduced_word_pi0(w)).dump() + "\n");
    });

    // act
    CommonOpts act_opts;
    std::string act_element_arg, act_root_arg;
    auto* act_cmd = app.add_subcommand("act", "apply an element to a root");
    add_common(act_cmd, act_opts, false);
    act_cmd->add_option("element", act_element_arg, "element JSON or @file")->required();
    act_cmd->add_option("root", act_root_arg, "root JSON or @file")->required();
    act_cmd->callback([&] {
        const WeylElement w = cli_detail::element_from_arg(act_element_arg, act_opts.nullity);
        const RootVector a = cli_detail::root_from_arg(act_root_arg, act_opts.nullity);
        emit(act_opts.output, out, nlohmann::json(act(w, a)).dump() + "\n");
    });

    // mul
    CommonOpts mul_opts;
    std::string mul_lhs_arg, mul_rhs_arg;
    auto* mul_cmd = app.add_subcommand("mul", "product of two elements");
    add_common(mul_cmd, mul_opts, false);
    mul_cmd->add_option("lhs", mul_lhs_arg, "element JSON or @file")->required();
    mul_cmd->add_option("rhs", mul_rhs_arg, "element JSON or @file")->required();
    mul_cmd->callback([&] {
        const WeylElement w1 = cli_detail::element_from_arg(mul_lhs_arg, mul_opts.nullity);
        const WeylElement w2 = cli_detail::element_from_arg(mul_rhs_arg, mul_opts.nullity);
        emit(mul_opts.output, out, nlohmann::json(multiply(w1, w2)).dump() + "\n");
    });

    // inv
    CommonOpts inv_opts;
    std::string inv_arg;
    auto* inv_cmd = app.add_subcommand("inv", "inverse of an element");
    add_common(inv_cmd, inv_opts, false);
    inv_cmd->add_option("element", inv_arg, "element JSON or @file")->required();
    inv_cmd->callback([&] {
        const WeylElement w = cli_detail::element_from_arg(inv_arg, inv_opts.nullity);
        emit(inv_opts.output, out, nlohmann::json(inverse(w)).dump() + "\n");
    });

    // conj
    CommonOpts conj_opts;
    std::string conj_outer_arg, conj_inner_arg;
    auto* conj_cmd = app.add_subcommand("conj", "conjugate: outer * inner * outer^-1");
    add_common(conj_cmd, conj_opts, false);
    conj_cmd->add_option("outer", conj_outer_arg, "element JSON or @file")->required();
    conj_cmd->add_option("inner", conj_inner_arg, "element JSON or @file")->required();
    conj_cmd->callback([&] {
        const WeylElement w1 = cli_detail::element_from_arg(conj_outer_arg, conj_opts.nullity);
        const WeylElement w2 = cli_detail::element_from_arg(conj_inner_arg, conj_opts.nullity);
        emit(conj_opts.output, out, nlohmann::json(conjugate(w1, w2)).dump() + "\n");
    });

    // height
    CommonOpts height_opts;
    std::string height_arg;
    auto* height_cmd = app.add_subcommand("height", "height of a root");
    add_common(height_cmd, height_opts, false);
    height_cmd->add_option("root", height_arg, "root JSON or @file")->required();
    height_cmd->callback([&] {
        const RootVector a = cli_detail::root_from_arg(height_arg, height_opts.nullity);
        emit(height_opts.output, out, std::to_string(height(a)) + "\n");
    });

    // roots
    CommonOpts roots_opts;
    Int roots_max_height = 0;
    auto* roots_cmd = app.add_subcommand("roots", "all roots with |height| <= H");
    add_common(roots_cmd, roots_opts, true);
    roots_cmd->add_option("--max-height", roots_max_height, "height bound H")
        ->required()
        ->check(CLI::NonNegativeNumber);
    roots_cmd->callback([&] {
        const auto roots = enumerate_roots(roots_opts.nullity, roots_max_height);
        std::string text;
        if (roots_opts.format == "csv") {
            text = "k";
            for (std::size_t i = 1; i <= roots_opts.nullity; ++i)
                text += ",sigma" + std::to_string(i);
            text += "\n";
            for (const auto& a : roots) {
                text += std::to_string(a.k());
                for (Int c : a.sigma().coords()) text += "," + std::to_string(c);
                text += "\n";
            }
        } else {
            text = nlohmann::json(roots).dump() + "\n";
        }
        emit(roots_opts.output, out, text);
    });

    // basis-check
    CommonOpts basis_check_opts;
    std::string basis_check_arg;
    auto* basis_check_cmd = app.add_subcommand("basis-check", "is the root list a root basis?");
    add_common(basis_check_cmd, basis_check_opts, false);
    basis_check_cmd->add_option("basis", basis_check_arg, "array of roots, JSON or @file")->required();
    basis_check_cmd->callback([&] {
        const auto roots = cli_detail::root_list_from_arg(basis_check_arg, basis_check_opts.nullity);
        emit(basis_check_opts.output, out, is_root_basis(roots) ? "true\n" : "false\n");
    });

    // invariant-matrix
    CommonOpts invmat_opts;
    std::string invmat_arg;
    auto* invmat_cmd = app.add_subcommand("invariant-matrix",
                                          "coordinates of the sigma_j in a root basis (orbit invariant)");
    add_common(invmat_cmd, invmat_opts, false);
    invmat_cmd->add_option("basis", invmat_arg, "array of roots, JSON or @file")->required();
    invmat_cmd->callback([&] {
        const RootBasis pi = cli_detail::basis_from_arg(invmat_arg, invmat_opts.nullity);
        emit(invmat_opts.output, out, nlohmann::json(invariant_matrix(pi)).dump() + "\n");
    });

    // find-conjugator
    CommonOpts findconj_opts;
    std::string findconj_from_arg, findconj_to_arg;
    auto* findconj_cmd = app.add_subcommand("find-conjugator",
                                            "element mapping one root basis onto another, or null");
    add_common(findconj_cmd, findconj_opts, false);
    findconj_cmd->add_option("from", findconj_from_arg, "array of roots, JSON or @file")->required();
    findconj_cmd->add_option("to", findconj_to_arg, "array of roots, JSON or @file")->required();
    findconj_cmd->callback([&] {
        const RootBasis pi1 = cli_detail::basis_from_arg(findconj_from_arg, findconj_opts.nullity);
        const RootBasis pi2 = cli_detail::basis_from_arg(findconj_to_arg, findconj_opts.nullity);
        const auto w = find_conjugator(pi1, pi2);
        emit(findconj_opts.output, out,
             (w ? nlohmann::json(*w) : nlohmann::json(nullptr)).dump() + "\n");
    });

    // pin-family
    CommonOpts pin_opts;
    Int pin_n = 2;
    auto* pin_cmd = app.add_subcommand("pin-family", "the n-th basis of the non-conjugate family");
    add_common(pin_cmd, pin_opts, false);
    pin_cmd->add_option("--n", pin_n, "family parameter, n > 1")->required();
    pin_cmd->callback([&] {
        emit(pin_opts.output, out, nlohmann::json(pi_n_family(pin_opts.nullity, pin_n)).dump() + "\n");
    });

    // verify-bfs
    CommonOpts verify_bfs_opts;
    Int verify_bfs_depth = 0;
    bool verify_bfs_report = false;
    auto* verify_bfs_cmd =
        app.add_subcommand("verify-bfs", "check the length formula against BFS distances");
    add_common(verify_bfs_cmd, verify_bfs_opts, false);
    verify_bfs_cmd->add_option("--depth", verify_bfs_depth, "BFS depth")
        ->required()
        ->check(CLI::NonNegativeNumber);
    verify_bfs_cmd->add_flag("--report", verify_bfs_report, "print one JSON report line per element");
    verify_bfs_cmd->callback([&] {
        const auto reports = verify_length_formula(verify_bfs_opts.nullity, verify_bfs_depth);
        std::size_t disagreements = 0;
        for (const auto& r : reports)
            if (!r.agree) ++disagreements;
        std::string text;
        if (verify_bfs_report)
            for (const auto& r : reports) text += nlohmann::json(r).dump() + "\n";
        text += nlohmann::json{{"nullity", verify_bfs_opts.nullity},
                               {"depth", verify_bfs_depth},
                               {"elements", reports.size()},
                               {"disagreements", disagreements}}
                    .dump() +
                "\n";
        emit(verify_bfs_opts.output, out, text);
        if (disagreements != 0) exit_code = 1;
    });

    // verify-affine
    std::size_t verify_affine_nullity = 1;
    std::string verify_affine_output;
    Int verify_affine_range = 0;
    auto* verify_affine_cmd =
        app.add_subcommand("verify-affine", "nullity-1 cross-checks against the classical formulas");
    verify_affine_cmd->add_option("--nullity", verify_affine_nullity, "must be 1")
        ->check(CLI::PositiveNumber);
    verify_affine_cmd->add_option("--output", verify_affine_output,
                                  "write the result to this file instead of stdout");
    verify_affine_cmd->add_option("--range", verify_affine_range, "parameter range K")
        ->required()
        ->check(CLI::NonNegativeNumber);
    verify_affine_cmd->callback([&] {
        if (verify_affine_nullity != 1)
            throw std::invalid_argument("verify-affine is defined for nullity 1 only");
        const Int range = verify_affine_range;
        std::size_t checks = 0, failures = 0;
        auto check = [&](bool ok, const std::string& what) {
            ++checks;
            if (!ok) {
                ++failures;
                err << "mismatch: " << what << "\n";
            }
        };
        for (Int s = 0; s <= 1; ++s) {
            for (Int n = -range; n <= range; ++n) {
                const WeylElement w(s == 0 ? 1 : -1, LatticeVector({n}));
                check(classical_affine_length(s, n) == length_pi0(w),
                      "classical length at s=" + std::to_string(s) + " n=" + std::to_string(n));
            }
        }
        for (Int parity : {Int{1}, Int{-1}}) {
            for (Int m = -range; m <= range; ++m) {
                const WeylElement w(parity, LatticeVector({m}));
                const Int len = length_pi0(w);
                check(inversion_count_nu1(w, len + 2) == len,
                      "inversion count at eps=" + std::to_string(parity) + " m=" + std::to_string(m));
            }
        }
        for (Int n = -range; n <= range; ++n) {
            for (Int m = -range; m <= range; ++m) {
                for (Int k = -1; k <= 1; ++k) {
                    const RootVector alpha(k, LatticeVector({m}));
                    const auto plain = pi0_coordinates(act(WeylElement(1, LatticeVector({n})), alpha));
                    const auto twisted = pi0_coordinates(act(WeylElement(-1, LatticeVector({n})), alpha));
                    check(affine_translation_action(n, m, k) == std::pair(plain[0], plain[1]) &&
                              affine_twisted_action(n, m, k) == std::pair(twisted[0], twisted[1]),
                          "translation action at n=" + std::to_string(n) + " m=" + std::to_string(m) +
                              " k=" + std::to_string(k));
                }
            }
        }
        emit(verify_affine_output, out,
             nlohmann::json{{"range", range}, {"checks", checks}, {"failures", failures}}.dump() + "\n");
        if (failures != 0) exit_code = 1;
    });

    // growth
    CommonOpts growth_opts;
    Int growth_depth = 0;
    auto* growth_cmd = app.add_subcommand("growth", "BFS level sizes over the Pi0 generators");
    add_common(growth_cmd, growth_opts, true);
    growth_cmd->add_option("--depth", growth_depth, "BFS depth")
        ->required()
        ->check(CLI::NonNegativeNumber);
    growth_cmd->callback([&] {
        const auto levels = bfs_lengths(pi0_generators(growth_opts.nullity), growth_depth).level_sizes;
        std::string text;
        if (growth_opts.format == "csv") {
            text = "depth,count\n";
            for (std::size_t d = 0; d < levels.size(); ++d)
                text += std::to_string(d) + "," + std::to_string(levels[d]) + "\n";
        } else {
            text = nlohmann::json(levels).dump() + "\n";
        }
        emit(growth_opts.output, out, text);
    });

    try {
        std::reverse(args.begin(), args.end());
        app.parse(std::move(args));
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return 2;
    } catch (const nlohmann::json::exception& e) {
        err << "error: malformed JSON: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::overflow_error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    return exit_code;
}

}  // namespace a1weyl
