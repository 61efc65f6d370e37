#include "weightfilt/json_io.hpp"

#include <fstream>

#include <nlohmann/json.hpp>

namespace wfl {

namespace {

int int_from_json(const Json& j, const std::string& where) {
    if (j.is_number_integer()) return j.get<int>();
    if (j.is_string()) {
        try {
            return std::stoi(j.get<std::string>());
        } catch (const std::exception&) {
        }
    }
    throw ParseError(where + ": expected an integer");
}

int int_from_key(const std::string& key, const std::string& where) {
    try {
        std::size_t used = 0;
        int v = std::stoi(key, &used);
        if (used == key.size()) return v;
    } catch (const std::exception&) {
    }
    throw ParseError(where + ": key '" + key + "' is not an integer");
}

Integer big_int_from_json(const Json& j, const std::string& where) {
    if (j.is_number_integer()) return Integer(j.get<long long>());
    if (j.is_string()) {
        try {
            return Integer(j.get<std::string>());
        } catch (const std::exception&) {
        }
    }
    throw ParseError(where + ": expected an integer");
}

Face face_from_json(const Json& j, const std::string& where) {
    if (!j.is_array()) throw ParseError(where + ": face must be an array of indices");
    Face f;
    for (const auto& e : j) f.push_back(int_from_json(e, where));
    if (!std::is_sorted(f.begin(), f.end()))
        throw ParseError(where + ": face {" + face_key(f) + "} is not sorted");
    return f;
}

StratumComponent component_from_key(const std::string& key, const std::string& where) {
    auto sep = key.rfind(':');
    if (sep == std::string::npos)
        throw ParseError(where + ": component key '" + key + "' lacks 'face:label'");
    StratumComponent comp;
    try {
        comp.face = face_from_key(key.substr(0, sep));
    } catch (const ParseError&) {
        throw ParseError(where + ": bad face in component key '" + key + "'");
    }
    comp.label = key.substr(sep + 1);
    return comp;
}

}  // namespace

Json rational_to_json(const Rational& q) { return rational_to_string(q); }

Rational rational_from_json(const Json& j, const std::string& where) {
    if (j.is_number_integer()) return Rational(j.get<long long>());
    if (j.is_string()) {
        try {
            return rational_from_string(j.get<std::string>());
        } catch (const ParseError& e) {
            throw ParseError(where + ": " + e.what());
        }
    }
    throw ParseError(where + ": expected a rational as \"a/b\" or an integer");
}

Json matrix_to_json(const RationalMatrix& m) {
    Json rows = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(rational_to_json(m.at(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

RationalMatrix matrix_from_json(const Json& j, const std::string& where) {
    if (!j.is_array()) throw ParseError(where + ": matrix must be an array of rows");
    std::size_t rows = j.size();
    std::size_t cols = rows == 0 ? 0 : 0;
    if (rows > 0) {
        if (!j[0].is_array()) throw ParseError(where + ": matrix rows must be arrays");
        cols = j[0].size();
    }
    RationalMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        if (!j[i].is_array() || j[i].size() != cols)
            throw ParseError(where + ": ragged matrix at row " + std::to_string(i));
        for (std::size_t c = 0; c < cols; ++c)
            m.at(i, c) = rational_from_json(j[i][c], where + "[" + std::to_string(i) + "][" +
                                                         std::to_string(c) + "]");
    }
    return m;
}

Json subspace_to_json(const RationalSubspace& s) { return matrix_to_json(s.basis()); }

Json filtration_to_json(const Filtration& f) {
    Json steps = Json::object();
    for (const auto& [j, s] : f.jumps()) steps[std::to_string(j)] = subspace_to_json(s);
    Json graded = Json::object();
    for (const auto& [j, d] : f.graded_dims()) graded[std::to_string(j)] = d;
    return Json{{"ambient_dim", f.ambient_dim()}, {"steps", steps}, {"graded_dims", graded}};
}

namespace {

Nerve nerve_from_json(const Json& j) {
    if (!j.is_object()) throw ParseError("fixture: expected an object");
    if (!j.contains("n")) throw ParseError("fixture: missing 'n'");
    int n = int_from_json(j.at("n"), "n");
    if (!j.contains("faces") || !j.at("faces").is_array())
        throw ParseError("fixture: missing 'faces' array");
    std::set<Face> faces;
    for (const auto& fj : j.at("faces")) faces.insert(face_from_json(fj, "faces"));
    std::map<Face, std::vector<std::string>> components;
    if (j.contains("components")) {
        if (!j.at("components").is_object())
            throw ParseError("fixture: 'components' must be an object");
        for (const auto& [key, labels] : j.at("components").items()) {
            Face f;
            try {
                f = face_from_key(key);
            } catch (const ParseError&) {
                throw ParseError("components: bad face key '" + key + "'");
            }
            if (!labels.is_array() || labels.empty())
                throw ParseError("components['" + key + "']: expected a nonempty array");
            std::vector<std::string> names;
            for (const auto& l : labels) {
                if (l.is_string())
                    names.push_back(l.get<std::string>());
                else
                    names.push_back(l.dump());
            }
            components[f] = std::move(names);
        }
    }
    // default: one connected component per face
    for (const Face& f : faces)
        if (!components.count(f)) components[f] = {"0"};
    try {
        return Nerve(n, std::move(faces), std::move(components));
    } catch (const Error& e) {
        throw ParseError(std::string("nerve: ") + e.what());
    }
}

std::vector<CurveRecord> curves_from_json(const Json& j) {
    std::vector<CurveRecord> curves;
    if (!j.contains("curves")) return curves;
    if (!j.at("curves").is_array()) throw ParseError("fixture: 'curves' must be an array");
    for (const auto& cj : j.at("curves")) {
        if (!cj.is_object() || !cj.contains("level") || !cj.contains("ends"))
            throw ParseError("curves: each record needs 'level' and 'ends'");
        CurveRecord rec;
        rec.level = int_from_json(cj.at("level"), "curves.level");
        const Json& ends = cj.at("ends");
        if (!ends.is_array() || ends.size() != 2)
            throw ParseError("curves.ends: expected exactly two endpoints");
        StratumComponent* slots[2] = {&rec.end1, &rec.end2};
        for (int e = 0; e < 2; ++e) {
            if (!ends[e].is_array() || ends[e].size() != 2)
                throw ParseError("curves.ends: endpoint must be [face, label]");
            slots[e]->face = face_from_json(ends[e][0], "curves.ends");
            slots[e]->label = ends[e][1].is_string() ? ends[e][1].get<std::string>()
                                                     : ends[e][1].dump();
        }
        curves.push_back(std::move(rec));
    }
    return curves;
}

StratumCohomology cohomology_from_json(const Json& j) {
    StratumCohomology coh;
    if (!j.contains("cohomology")) return coh;
    const Json& cj = j.at("cohomology");
    if (!cj.is_object()) throw ParseError("fixture: 'cohomology' must be an object");
    for (const auto& [level_key, comps] : cj.items()) {
        int level = int_from_key(level_key, "cohomology");
        if (!comps.is_object())
            throw ParseError("cohomology['" + level_key + "']: expected an object");
        for (const auto& [comp_key, body] : comps.items()) {
            std::string where = "cohomology['" + level_key + "']['" + comp_key + "']";
            StratumComponent comp = component_from_key(comp_key, where);
            StratumCohomology::ComponentData data;
            if (!body.is_object() || !body.contains("betti"))
                throw ParseError(where + ": missing 'betti'");
            for (const auto& b : body.at("betti")) {
                int v = int_from_json(b, where + ".betti");
                if (v < 0) throw ParseError(where + ".betti: negative dimension");
                data.betti.push_back(static_cast<std::size_t>(v));
            }
            if (body.contains("gysin")) {
                if (!body.at("gysin").is_object())
                    throw ParseError(where + ".gysin: expected an object");
                for (const auto& [tkey, by_degree] : body.at("gysin").items()) {
                    StratumComponent target = component_from_key(tkey, where + ".gysin");
                    if (!by_degree.is_object())
                        throw ParseError(where + ".gysin['" + tkey + "']: expected an object");
                    std::map<int, RationalMatrix> mats;
                    for (const auto& [dkey, mat] : by_degree.items())
                        mats[int_from_key(dkey, where + ".gysin")] =
                            matrix_from_json(mat, where + ".gysin['" + tkey + "']['" + dkey + "']");
                    data.gysin[target] = std::move(mats);
                }
            }
            try {
                coh.set_component(level, std::move(comp), std::move(data));
            } catch (const Error& e) {
                throw ParseError(where + ": " + e.what());
            }
        }
    }
    return coh;
}

}  // namespace

SncFixture snc_fixture_from_json(const Json& j) {
    Nerve nerve = nerve_from_json(j);
    bool log_cy = false;
    if (j.contains("log_cy")) {
        if (!j.at("log_cy").is_boolean()) throw ParseError("fixture: 'log_cy' must be a boolean");
        log_cy = j.at("log_cy").get<bool>();
    }
    std::vector<CurveRecord> curves = curves_from_json(j);
    try {
        return SncFixture{SncPair(std::move(nerve), log_cy, std::move(curves)),
                          cohomology_from_json(j)};
    } catch (const ParseError&) {
        throw;
    } catch (const Error& e) {
        throw ParseError(std::string("fixture: ") + e.what());
    }
}

Degeneration degen_fixture_from_json(const Json& j) {
    Nerve nerve = nerve_from_json(j);
    if (!j.contains("d")) throw ParseError("fixture: missing 'd'");
    int d = int_from_json(j.at("d"), "d");
    std::map<int, NilpotentEndo> logs;
    if (j.contains("monodromy_logs")) {
        if (!j.at("monodromy_logs").is_object())
            throw ParseError("fixture: 'monodromy_logs' must be an object");
        for (const auto& [key, mat] : j.at("monodromy_logs").items()) {
            int degree = int_from_key(key, "monodromy_logs");
            RationalMatrix m = matrix_from_json(mat, "monodromy_logs['" + key + "']");
            try {
                logs.emplace(degree, NilpotentEndo(std::move(m), degree));
            } catch (const Error& e) {
                throw ParseError("monodromy_logs['" + key + "']: " + std::string(e.what()));
            }
        }
    }
    std::map<int, RationalMatrix> pairings;
    if (j.contains("pairing")) {
        const Json& pj = j.at("pairing");
        if (pj.is_array()) {
            // single matrix: the middle-degree pairing H^d x H^d
            pairings.emplace(d, matrix_from_json(pj, "pairing"));
        } else if (pj.is_object()) {
            for (const auto& [key, mat] : pj.items())
                pairings.emplace(int_from_key(key, "pairing"),
                                 matrix_from_json(mat, "pairing['" + key + "']"));
        } else {
            throw ParseError("fixture: 'pairing' must be a matrix or an object");
        }
    }
    std::map<int, RationalMatrix> restrictions;
    if (j.contains("restrictions")) {
        if (!j.at("restrictions").is_object())
            throw ParseError("fixture: 'restrictions' must be an object");
        for (const auto& [key, mat] : j.at("restrictions").items())
            restrictions.emplace(int_from_key(key, "restrictions"),
                                 matrix_from_json(mat, "restrictions['" + key + "']"));
    }
    try {
        return Degeneration(std::move(nerve), d, std::move(logs), std::move(pairings),
                            std::move(restrictions));
    } catch (const Error& e) {
        throw ParseError(std::string("fixture: ") + e.what());
    }
}

PwFixture pw_fixture_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("betti")) throw ParseError("fixture: missing 'betti'");
    std::vector<std::size_t> betti;
    for (const auto& b : j.at("betti")) {
        int v = int_from_json(b, "betti");
        if (v < 0) throw ParseError("betti: negative dimension");
        betti.push_back(static_cast<std::size_t>(v));
    }
    std::map<int, RationalMatrix> restrictions;
    if (j.contains("restrictions"))
        for (const auto& [key, mat] : j.at("restrictions").items())
            restrictions.emplace(int_from_key(key, "restrictions"),
                                 matrix_from_json(mat, "restrictions['" + key + "']"));
    FiberedSurfaceData surface = [&] {
        try {
            return FiberedSurfaceData(std::move(betti), std::move(restrictions));
        } catch (const Error& e) {
            throw ParseError(std::string("fixture: ") + e.what());
        }
    }();
    std::map<int, Filtration> weight;
    if (j.contains("weight")) {
        if (!j.at("weight").is_object()) throw ParseError("fixture: 'weight' must be an object");
        for (const auto& [dkey, chain] : j.at("weight").items()) {
            int degree = int_from_key(dkey, "weight");
            if (!chain.is_object())
                throw ParseError("weight['" + dkey + "']: expected index -> basis matrix");
            std::map<int, RationalSubspace> steps;
            for (const auto& [ikey, mat] : chain.items()) {
                RationalMatrix basis =
                    matrix_from_json(mat, "weight['" + dkey + "']['" + ikey + "']");
                steps.emplace(int_from_key(ikey, "weight"),
                              RationalSubspace::from_span(basis));
            }
            std::size_t ambient = surface.betti(degree);
            try {
                weight.emplace(degree, Filtration(ambient, std::move(steps)));
            } catch (const Error& e) {
                throw ParseError("weight['" + dkey + "']: " + std::string(e.what()));
            }
        }
    }
    return PwFixture{std::move(surface), std::move(weight)};
}

TwistWord twist_word_from_json(const Json& j) {
    if (!j.is_array()) throw ParseError("word: expected an array of letters");
    std::vector<SL2Matrix> letters;
    for (std::size_t i = 0; i < j.size(); ++i) {
        const Json& letter = j[i];
        std::string where = "word[" + std::to_string(i) + "]";
        try {
            if (letter.is_object()) {
                if (!letter.contains("s") || !letter.contains("t"))
                    throw ParseError(where + ": expected keys 's' and 't'");
                letters.push_back(twist_matrix(letter.at("s").get<long long>(),
                                               letter.at("t").get<long long>()));
            } else if (letter.is_array()) {
                if (letter.size() != 2 || !letter[0].is_array() || letter[0].size() != 2 ||
                    !letter[1].is_array() || letter[1].size() != 2)
                    throw ParseError(where + ": expected a 2x2 matrix");
                letters.emplace_back(big_int_from_json(letter[0][0], where),
                                     big_int_from_json(letter[0][1], where),
                                     big_int_from_json(letter[1][0], where),
                                     big_int_from_json(letter[1][1], where));
            } else {
                throw ParseError(where + ": expected a matrix or an {s,t} pair");
            }
        } catch (const ParseError&) {
            throw;
        } catch (const Error& e) {
            throw ParseError(where + ": " + e.what());
        } catch (const Json::exception& e) {
            throw ParseError(where + ": " + e.what());
        }
    }
    try {
        return TwistWord(std::move(letters));
    } catch (const Error& e) {
        throw ParseError(std::string("word: ") + e.what());
    }
}

Json sl2_to_json(const SL2Matrix& m) {
    return Json::array({Json::array({m.a.str(), m.b.str()}), Json::array({m.c.str(), m.d.str()})});
}

Json twist_word_to_json(const TwistWord& w) {
    Json arr = Json::array();
    for (const auto& m : w.letters()) arr.push_back(sl2_to_json(m));
    return arr;
}

Json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'");
    try {
        return Json::parse(in);
    } catch (const Json::exception& e) {
        throw ParseError(path + ": " + e.what());
    }
}

}  // namespace wfl
