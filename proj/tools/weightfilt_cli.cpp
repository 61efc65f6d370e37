// Command-line surface over the weightfilt engines. Every subcommand reads
// JSON fixtures or inline expressions, prints one Report object to stdout
// (or --out), and exits 0 when all verdicts pass, 1 when any fails, 2 on
// malformed input. Output is deterministic: identical inputs give identical
// bytes.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "weightfilt/json_io.hpp"

using namespace wfl;

namespace {

struct Verdict {
    std::string check;
    bool pass;
    Json witness;  // enough data to re-verify by hand
};

struct Report {
    std::string command;
    Json inputs = Json::object();
    std::vector<Verdict> verdicts;
    Json data = Json::object();

    bool all_pass() const {
        for (const auto& v : verdicts)
            if (!v.pass) return false;
        return true;
    }

    Json to_json() const {
        Json out;
        out["command"] = command;
        out["inputs"] = inputs;
        Json vs = Json::array();
        for (const auto& v : verdicts) {
            Json one;
            one["check"] = v.check;
            one["pass"] = v.pass;
            if (!v.witness.is_null()) one["witness"] = v.witness;
            vs.push_back(std::move(one));
        }
        out["verdicts"] = vs;
        if (!data.empty()) out["data"] = data;
        out["exit_code"] = all_pass() ? 0 : 1;
        return out;
    }
};

std::string fnv1a64_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open '" + path + "'");
    std::uint64_t h = 1469598103934665603ull;
    char c;
    while (in.get(c)) {
        h ^= static_cast<unsigned char>(c);
        h *= 1099511628211ull;
    }
    std::ostringstream hex;
    hex << std::hex << h;
    return hex.str();
}

Json file_digest(const std::string& path) {
    return Json{{"path", path}, {"fnv1a64", fnv1a64_file(path)}};
}

int finish(const Report& report, const std::string& out_path) {
    std::string text = report.to_json().dump(2) + "\n";
    if (out_path.empty()) {
        std::cout << text;
    } else {
        std::ofstream out(out_path, std::ios::binary);
        if (!out) {
            std::cerr << "error: cannot write '" << out_path << "'\n";
            return 2;
        }
        out << text;
    }
    return report.all_pass() ? 0 : 1;
}

// Vector expressions over the named basis of a lattice: "e1", "e2+f2",
// "2g1-3h2+f3", or an inline JSON array of integer coordinates.
LatticeVector parse_vector_expr(const std::string& text, const BilinearLattice& lattice) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    if (s.empty()) throw ParseError("empty vector expression");
    LatticeVector v;
    v.coords.assign(lattice.rank(), 0);
    if (s[0] == '[') {
        Json arr = Json::parse(s, nullptr, false);
        if (arr.is_discarded() || !arr.is_array() || arr.size() != lattice.rank())
            throw ParseError("vector array must have " + std::to_string(lattice.rank()) +
                             " integer entries");
        for (std::size_t i = 0; i < lattice.rank(); ++i) {
            if (!arr[i].is_number_integer())
                throw ParseError("vector array must have integer entries");
            v.coords[i] = arr[i].get<std::int64_t>();
        }
        return v;
    }
    std::size_t pos = 0;
    while (pos < s.size()) {
        std::int64_t sign = 1;
        if (s[pos] == '+' || s[pos] == '-') {
            sign = s[pos] == '-' ? -1 : 1;
            ++pos;
        }
        std::size_t digits = pos;
        while (digits < s.size() && std::isdigit(static_cast<unsigned char>(s[digits]))) ++digits;
        std::int64_t coeff = 1;
        if (digits > pos) {
            coeff = std::stoll(s.substr(pos, digits - pos));
            pos = digits;
        }
        std::size_t name_end = pos;
        while (name_end < s.size() && s[name_end] != '+' && s[name_end] != '-') ++name_end;
        std::string name = s.substr(pos, name_end - pos);
        if (name.empty()) throw ParseError("expected a basis name in '" + text + "'");
        int idx = lattice.label_index(name);
        if (idx < 0) throw ParseError("unknown basis vector '" + name + "'");
        v.coords[static_cast<std::size_t>(idx)] += sign * coeff;
        pos = name_end;
    }
    return v;
}

Json subspace_pair_witness(const char* left_name, const RationalSubspace& left,
                           const char* right_name, const RationalSubspace& right) {
    return Json{{left_name, subspace_to_json(left)}, {right_name, subspace_to_json(right)}};
}

// ---------------------------------------------------------------- mwf ----

int run_mwf(const std::string& matrix_path, int center, const std::string& out_path) {
    Report report;
    report.command = "mwf";
    report.inputs = Json{{"matrix", file_digest(matrix_path)}, {"center", center}};
    Json j = load_json_file(matrix_path);
    if (j.is_object() && j.contains("matrix")) j = j.at("matrix");
    RationalMatrix m = matrix_from_json(j, "matrix");

    std::optional<NilpotentEndo> endo;
    try {
        endo.emplace(m, center);
        report.verdicts.push_back({"nilpotent", true, Json()});
    } catch (const NotNilpotent& e) {
        report.verdicts.push_back({"nilpotent", false, Json{{"reason", e.what()}}});
        return finish(report, out_path);
    }
    Filtration f = weight_filtration(*endo);
    report.data["filtration"] = filtration_to_json(f);
    report.verdicts.push_back({"axioms_hold", check_mwf_axioms(*endo, f), Json()});
    return finish(report, out_path);
}

// ---------------------------------------------------------------- snc ----

int run_snc(const std::string& fixture_path, const std::string& out_path) {
    Report report;
    report.command = "snc";
    report.inputs = Json{{"fixture", file_digest(fixture_path)}};
    SncFixture fx = snc_fixture_from_json(load_json_file(fixture_path));

    StrataInfo info = stratify(fx.pair);
    Json strata = Json::array();
    for (const auto& torus : info.profound)
        strata.push_back(Json{{"face", torus.component.face},
                              {"component", torus.component.label},
                              {"torus_dim", torus.dim}});
    report.data["delta"] = info.delta;
    report.data["profound_tori"] = strata;

    StarReport star = check_star_condition(fx.pair);
    report.verdicts.push_back(
        {"star_condition", star.ok, star.ok ? Json() : Json{{"reason", star.reason}}});

    bool have_table = false;
    WeightTable table;
    try {
        table = weight_ss(fx.pair, fx.cohomology);
        have_table = true;
        report.verdicts.push_back({"d1_square_zero", true, Json()});
    } catch (const D1SquareNonzero& e) {
        report.verdicts.push_back(
            {"d1_square_zero", false, Json{{"p", e.p}, {"q", e.q}, {"reason", e.what()}}});
    }
    if (have_table) {
        Json weights = Json::object();
        for (const auto& [key, dim] : table.entries()) {
            std::string m = std::to_string(key.first);
            if (!weights.contains(m)) weights[m] = Json::object();
            weights[m][std::to_string(key.second)] = dim;
        }
        report.data["weight_table"] = weights;
        if (fx.pair.is_log_cy() || star.ok) {
            bool bound = check_bound(table, info.delta);
            Json witness;
            if (!bound) {
                witness = Json::array();
                for (const auto& [key, dim] : table.entries())
                    if (key.second == 2 * key.first && dim > binomial(info.delta, key.first))
                        witness.push_back(Json{{"degree", key.first},
                                               {"dim", dim},
                                               {"bound", binomial(info.delta, key.first)}});
            }
            report.verdicts.push_back({"top_weight_bound", bound, witness});
        }
    }
    return finish(report, out_path);
}

// -------------------------------------------------------------- degen ----

int run_degen(const std::string& fixture_path, std::optional<int> degree,
              const std::string& out_path) {
    Report report;
    report.command = "degen";
    report.inputs = Json{{"fixture", file_digest(fixture_path)}};
    Degeneration deg = degen_fixture_from_json(load_json_file(fixture_path));
    if (degree) report.inputs["degree"] = *degree;

    std::vector<int> degrees;
    if (degree) {
        degrees.push_back(*degree);
    } else {
        for (int k = 0; k <= 2 * deg.d(); ++k)
            if (deg.has_log(k)) degrees.push_back(k);
    }
    for (int k : degrees) {
        if (deg.has_log(k) && deg.has_log(2 * deg.d() - k) && deg.has_pairing(k)) {
            bool ok = duality_check(deg, k);
            Json witness;
            if (!ok) {
                Filtration mk = weight_filtration(deg.log(k));
                Filtration md = weight_filtration(deg.log(2 * deg.d() - k));
                witness = subspace_pair_witness(
                    "M_{2k-1}", mk.step(2 * k - 1), "complement_of_M_{2d-2k}",
                    kernel((deg.pairing_for(k) * md.step(2 * deg.d() - 2 * k).basis())
                               .transpose()));
            }
            report.verdicts.push_back({"duality_degree_" + std::to_string(k), ok, witness});
        }
        if (deg.has_restriction(k)) {
            bool ok = verify_maincy(deg, k);
            Json witness;
            if (!ok) {
                Filtration mk = weight_filtration(deg.log(k));
                witness = subspace_pair_witness("M_{2k-1}", mk.step(2 * k - 1),
                                                "kernel_of_restriction",
                                                kernel(deg.restriction(k)));
            }
            report.verdicts.push_back({"maincy_degree_" + std::to_string(k), ok, witness});
        }
    }
    if (report.verdicts.empty())
        throw ParseError("fixture has no degree with enough data for any check");
    return finish(report, out_path);
}

// ----------------------------------------------------------------- k3 ----

int run_k3(const std::string& beta_expr, const std::string& rho_expr,
           const std::string& out_path) {
    Report report;
    report.command = "k3";
    report.inputs = Json{{"beta", beta_expr}, {"rho", rho_expr}};
    BilinearLattice lattice = k3_lattice();
    LatticeVector beta = parse_vector_expr(beta_expr, lattice);
    LatticeVector rho = parse_vector_expr(rho_expr, lattice);

    try {
        RationalMatrix n = n_beta_rho(lattice, beta, rho);
        report.verdicts.push_back({"preconditions_hold", true, Json()});
        report.verdicts.push_back({"n_cubed_zero", n.pow(3).is_zero(), Json()});
        Filtration mprime = mprime_filtration(lattice, beta, rho);
        report.data["mprime"] = filtration_to_json(mprime);
        NilpotentEndo endo(n, 2);
        Filtration mwf = weight_filtration(endo);
        bool same = mprime == mwf;
        report.verdicts.push_back(
            {"mprime_equals_weight_filtration", same,
             same ? Json() : Json{{"weight_filtration", filtration_to_json(mwf)}}});
        report.verdicts.push_back({"k3_pw_check", k3_pw_check(lattice, beta, rho), Json()});
    } catch (const PreconditionViolated& e) {
        report.verdicts.push_back({"preconditions_hold", false, Json{{"reason", e.what()}}});
    }
    return finish(report, out_path);
}

// ----------------------------------------------------------- lefschetz ----

Json word_input(const std::string& word_arg) {
    std::string trimmed = word_arg;
    trimmed.erase(0, trimmed.find_first_not_of(" \t\n"));
    if (!trimmed.empty() && trimmed[0] == '[') {
        Json j = Json::parse(trimmed, nullptr, false);
        if (j.is_discarded()) throw ParseError("--word is not valid JSON");
        return j;
    }
    return load_json_file(word_arg);
}

int run_lefschetz(const std::string& action, const std::string& word_arg, std::size_t pos,
                  const std::string& dir, const std::string& out_path) {
    Report report;
    report.command = "lefschetz " + action;
    report.inputs = Json{{"word", word_arg}};
    TwistWord word = twist_word_from_json(word_input(word_arg));

    if (action == "product") {
        report.data["total_monodromy"] = sl2_to_json(total_monodromy(word));
        report.verdicts.push_back({"letters_valid", true, Json()});
    } else if (action == "hurwitz") {
        report.inputs["pos"] = pos;
        report.inputs["dir"] = dir;
        HurwitzDirection d = dir == "left" ? HurwitzDirection::Left : HurwitzDirection::Right;
        TwistWord moved = hurwitz_move(word, pos, d);
        report.data["word"] = twist_word_to_json(moved);
        report.verdicts.push_back(
            {"monodromy_preserved", total_monodromy(moved) == total_monodromy(word), Json()});
    } else if (action == "invert") {
        if (word.size() != 1) throw ParseError("invert expects a word with exactly one letter");
        TwistWord inverse = factor_inverse_twist(word.letters()[0]);
        report.data["word"] = twist_word_to_json(inverse);
        report.verdicts.push_back(
            {"product_is_inverse", total_monodromy(inverse) == word.letters()[0].inverse(),
             Json()});
        report.verdicts.push_back({"eleven_letters", inverse.size() == 11, Json()});
    } else {  // complete
        TwistWord completed = complete_to_sphere(word);
        report.data["word"] = twist_word_to_json(completed);
        report.verdicts.push_back(
            {"product_identity", total_monodromy(completed).is_identity(), Json()});
        report.verdicts.push_back({"length_multiple_of_12", completed.size() % 12 == 0,
                                   Json{{"length", completed.size()}}});
    }
    return finish(report, out_path);
}

// ----------------------------------------------------------------- pw ----

int run_pw(const std::string& fixture_path, const std::string& out_path) {
    Report report;
    report.command = "pw";
    report.inputs = Json{{"fixture", file_digest(fixture_path)}};
    PwFixture fx = pw_fixture_from_json(load_json_file(fixture_path));
    if (fx.weight.empty()) throw ParseError("fixture has no 'weight' chains to compare");

    std::map<int, Filtration> P = perverse_filtration_surface(fx.surface);
    std::map<int, Filtration> P_compared;
    for (const auto& [degree, w] : fx.weight) {
        auto it = P.find(degree);
        if (it == P.end())
            throw ParseError("weight chain in degree " + std::to_string(degree) +
                             " has no restriction data");
        P_compared.emplace(degree, it->second);
    }
    bool equal = pw_compare(P_compared, fx.weight);
    Json witness;
    if (!equal) {
        witness = Json::object();
        for (const auto& [degree, p] : P_compared)
            witness[std::to_string(degree)] =
                Json{{"perverse", filtration_to_json(p)},
                     {"weight", filtration_to_json(fx.weight.at(degree))}};
    }
    report.verdicts.push_back({"pw_equal", equal, witness});
    for (const auto& [degree, p] : P_compared)
        report.data["perverse"][std::to_string(degree)] = filtration_to_json(p);
    return finish(report, out_path);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact weight-filtration computations on fixtures"};
    app.require_subcommand(1);
    std::string out_path;
    app.add_option("--out", out_path, "write the report JSON here instead of stdout");

    std::string matrix_path;
    int center = 0;
    CLI::App* mwf_cmd = app.add_subcommand("mwf", "monodromy weight filtration of a matrix");
    mwf_cmd->add_option("--matrix", matrix_path, "JSON matrix file")->required();
    mwf_cmd->add_option("--center", center, "weight the filtration is centered at")->required();

    std::string snc_fixture;
    CLI::App* snc_cmd = app.add_subcommand("snc", "strata, tori and the weight table of a pair");
    snc_cmd->add_option("--fixture", snc_fixture, "pair fixture JSON")->required();

    std::string degen_fixture;
    std::optional<int> degen_degree;
    CLI::App* degen_cmd =
        app.add_subcommand("degen", "duality and torus-kernel checks of a degeneration");
    degen_cmd->add_option("--fixture", degen_fixture, "degeneration fixture JSON")->required();
    degen_cmd->add_option("--degree", degen_degree, "restrict checks to one degree");

    std::string beta_expr, rho_expr;
    CLI::App* k3_cmd = app.add_subcommand("k3", "K3 lattice operator and its filtration");
    k3_cmd->add_option("--beta", beta_expr, "isotropic class, e.g. e1")->required();
    k3_cmd->add_option("--rho", rho_expr, "orthogonal positive class, e.g. e2+f2")->required();

    std::string lef_action, word_arg, dir = "right";
    std::size_t pos = 1;
    CLI::App* lef_cmd = app.add_subcommand("lefschetz", "twist word operations");
    lef_cmd->add_option("action", lef_action, "product | hurwitz | invert | complete")
        ->required()
        ->check(CLI::IsMember({"product", "hurwitz", "invert", "complete"}));
    lef_cmd->add_option("--word", word_arg, "inline JSON word or a path to one")->required();
    lef_cmd->add_option("--pos", pos, "1-based position for hurwitz");
    lef_cmd->add_option("--dir", dir, "left | right")->check(CLI::IsMember({"left", "right"}));

    std::string pw_fixture;
    CLI::App* pw_cmd = app.add_subcommand("pw", "perverse vs weight comparison");
    pw_cmd->add_option("--fixture", pw_fixture, "surface fixture JSON")->required();

    try {
        app.parse(argc, argv);
        if (mwf_cmd->parsed()) return run_mwf(matrix_path, center, out_path);
        if (snc_cmd->parsed()) return run_snc(snc_fixture, out_path);
        if (degen_cmd->parsed()) return run_degen(degen_fixture, degen_degree, out_path);
        if (k3_cmd->parsed()) return run_k3(beta_expr, rho_expr, out_path);
        if (lef_cmd->parsed()) return run_lefschetz(lef_action, word_arg, pos, dir, out_path);
        if (pw_cmd->parsed()) return run_pw(pw_fixture, out_path);
        return 2;
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 2;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const Json::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
