#include "weightfilt/snc.hpp"

#include <algorithm>
#include <sstream>

namespace wfl {

std::string face_key(const Face& f) {
    std::string key;
    for (std::size_t i = 0; i < f.size(); ++i) {
        if (i) key += ',';
        key += std::to_string(f[i]);
    }
    return key;
}

Face face_from_key(const std::string& key) {
    Face f;
    if (key.empty()) return f;
    std::istringstream in(key);
    std::string part;
    while (std::getline(in, part, ',')) {
        try {
            f.push_back(std::stoi(part));
        } catch (const std::exception&) {
            throw ParseError("bad face key '" + key + "'");
        }
    }
    if (!std::is_sorted(f.begin(), f.end()) || std::adjacent_find(f.begin(), f.end()) != f.end())
        throw ParseError("face key '" + key + "' is not sorted and distinct");
    return f;
}

Nerve::Nerve(int n, std::set<Face> faces, std::map<Face, std::vector<std::string>> components)
    : n_(n), faces_(std::move(faces)), components_(std::move(components)) {
    if (n_ <= 0 || faces_.empty()) throw EmptyNerve("a nerve needs n >= 1 and at least one face");
    for (const Face& f : faces_) {
        if (f.empty()) throw InvalidNerve("empty face listed");
        if (!std::is_sorted(f.begin(), f.end()) ||
            std::adjacent_find(f.begin(), f.end()) != f.end())
            throw InvalidNerve("face {" + face_key(f) + "} is not sorted and distinct");
        if (f.front() < 1 || f.back() > n_)
            throw InvalidNerve("face {" + face_key(f) + "} out of range 1.." + std::to_string(n_));
    }
    for (int i = 1; i <= n_; ++i)
        if (!faces_.count({i})) throw InvalidNerve("missing singleton {" + std::to_string(i) + "}");
    if (!check_closure()) throw InvalidNerve("faces are not closed under nonempty subsets");
    for (const Face& f : faces_) {
        auto it = components_.find(f);
        if (it == components_.end() || it->second.empty())
            throw InvalidNerve("face {" + face_key(f) + "} has no component labels");
    }
    for (const auto& [f, labels] : components_)
        if (!faces_.count(f))
            throw InvalidNerve("component labels for non-face {" + face_key(f) + "}");
}

const std::vector<std::string>& Nerve::components_of(const Face& f) const {
    auto it = components_.find(f);
    if (it == components_.end()) throw NotAFace("{" + face_key(f) + "}");
    return it->second;
}

int Nerve::max_face_size() const {
    std::size_t m = 0;
    for (const Face& f : faces_) m = std::max(m, f.size());
    return static_cast<int>(m);
}

bool Nerve::check_closure() const {
    for (const Face& f : faces_) {
        if (f.size() == 1) continue;
        // removing one element at a time reaches every nonempty subset
        for (std::size_t drop = 0; drop < f.size(); ++drop) {
            Face sub;
            for (std::size_t i = 0; i < f.size(); ++i)
                if (i != drop) sub.push_back(f[i]);
            if (!faces_.count(sub)) return false;
        }
    }
    return true;
}

SncPair::SncPair(Nerve nerve, bool is_log_cy, std::vector<CurveRecord> curves)
    : nerve_(std::move(nerve)), is_log_cy_(is_log_cy), curves_(std::move(curves)) {
    for (const CurveRecord& c : curves_) {
        if (c.level < 0) throw InvalidNerve("curve level must be >= 0");
        for (const StratumComponent* end : {&c.end1, &c.end2}) {
            if (static_cast<int>(end->face.size()) != c.level + 1)
                throw InvalidNerve("curve endpoint {" + face_key(end->face) +
                                   "} has size != level + 1");
            const auto& labels = nerve_.components_of(end->face);  // throws NotAFace
            if (std::find(labels.begin(), labels.end(), end->label) == labels.end())
                throw InvalidNerve("curve endpoint component '" + end->label +
                                   "' unknown on {" + face_key(end->face) + "}");
        }
    }
}

StrataInfo stratify(const SncPair& pair) {
    const Nerve& nerve = pair.nerve();
    StrataInfo info;
    info.delta = nerve.max_face_size();
    for (const Face& f : nerve.faces()) {
        bool minimal = true;
        for (const Face& g : nerve.faces())
            if (g.size() > f.size() && std::includes(g.begin(), g.end(), f.begin(), f.end())) {
                minimal = false;
                break;
            }
        if (!minimal) continue;
        for (const std::string& label : nerve.components_of(f)) {
            StratumComponent comp{f, label};
            info.minimal.push_back(comp);
            info.profound.push_back(ProfoundTorus{comp, static_cast<int>(f.size())});
        }
    }
    return info;
}

StarReport check_star_condition(const SncPair& pair) {
    StrataInfo info = stratify(pair);
    std::size_t j = info.minimal.front().face.size();
    for (const StratumComponent& c : info.minimal)
        if (c.face.size() != j)
            return {false, "minimal strata of unequal sizes " + std::to_string(j) + " and " +
                               std::to_string(c.face.size())};

    // Union-find over minimal stratum components, edges from curves one
    // level up the nerve (inside Y^{j-1}).
    std::map<StratumComponent, std::size_t> index;
    for (std::size_t i = 0; i < info.minimal.size(); ++i) index[info.minimal[i]] = i;
    std::vector<std::size_t> parent(info.minimal.size());
    for (std::size_t i = 0; i < parent.size(); ++i) parent[i] = i;
    auto find = [&](std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (const CurveRecord& c : pair.curves()) {
        if (c.level != static_cast<int>(j) - 1) continue;
        auto it1 = index.find(c.end1), it2 = index.find(c.end2);
        if (it1 == index.end() || it2 == index.end()) continue;  // not a minimal stratum
        parent[find(it1->second)] = find(it2->second);
    }
    for (std::size_t i = 1; i < parent.size(); ++i)
        if (find(i) != find(0))
            return {false, "minimal stratum components are not connected by level-" +
                               std::to_string(j - 1) + " curves"};
    return {true, ""};
}

void StratumCohomology::set_component(int level, StratumComponent comp, ComponentData data) {
    if (level < 0) throw ShapeMismatch("negative stratum level");
    if (static_cast<int>(comp.face.size()) != level)
        throw ShapeMismatch("component face size != level");
    levels_[level][std::move(comp)] = std::move(data);
}

std::size_t StratumCohomology::betti(int level, const StratumComponent& comp, int q) const {
    auto lit = levels_.find(level);
    if (lit == levels_.end()) return 0;
    auto cit = lit->second.find(comp);
    if (cit == lit->second.end()) return 0;
    if (q < 0 || static_cast<std::size_t>(q) >= cit->second.betti.size()) return 0;
    return cit->second.betti[q];
}

void WeightTable::set(int m, int q, std::size_t dim) {
    if (dim == 0) return;
    if (q < m || q > 2 * m)
        throw ShapeMismatch("weight " + std::to_string(q) + " outside [m, 2m] for m = " +
                            std::to_string(m));
    entries_[{m, q}] = dim;
}

std::size_t WeightTable::dim(int m, int q) const {
    auto it = entries_.find({m, q});
    return it == entries_.end() ? 0 : it->second;
}

std::size_t WeightTable::betti(int m) const {
    std::size_t total = 0;
    for (const auto& [key, d] : entries_)
        if (key.first == m) total += d;
    return total;
}

namespace {

// Basis offsets of the direct sum E_1^{-level, q} over the components of a
// level, in component order.
struct LevelBasis {
    std::vector<StratumComponent> comps;
    std::vector<std::size_t> offset;  // per comp, plus total at the back
};

LevelBasis level_basis(const StratumCohomology& coh, int level, int degree) {
    LevelBasis lb;
    std::size_t total = 0;
    auto lit = coh.levels().find(level);
    if (lit != coh.levels().end()) {
        for (const auto& [comp, data] : lit->second) {
            lb.comps.push_back(comp);
            lb.offset.push_back(total);
            total += coh.betti(level, comp, degree);
        }
    }
    lb.offset.push_back(total);
    return lb;
}

int removal_sign(const Face& source, const Face& target) {
    if (target.size() + 1 != source.size() ||
        !std::includes(source.begin(), source.end(), target.begin(), target.end()))
        throw ShapeMismatch("Gysin target {" + face_key(target) + "} is not a facet of {" +
                            face_key(source) + "}");
    for (std::size_t r = 0; r < source.size(); ++r) {
        if (r < target.size() && source[r] == target[r]) continue;
        return r % 2 == 0 ? 1 : -1;  // removed the (r+1)-th smallest index
    }
    throw ShapeMismatch("faces are equal");
}

// d1 : E_1^{-level, q} -> E_1^{-(level-1), q}, i.e. H^{q-2*level}(level
// strata) -> H^{q-2*level+2}(level-1 strata), as one block matrix.
RationalMatrix assemble_d1(const StratumCohomology& coh, int level, int q) {
    int src_deg = q - 2 * level;
    int tgt_deg = src_deg + 2;
    LevelBasis src = level_basis(coh, level, src_deg);
    LevelBasis tgt = level_basis(coh, level - 1, tgt_deg);
    RationalMatrix d(tgt.offset.back(), src.offset.back());
    auto lit = coh.levels().find(level);
    if (lit == coh.levels().end()) return d;
    for (std::size_t ci = 0; ci < src.comps.size(); ++ci) {
        const auto& comp = src.comps[ci];
        const auto& data = lit->second.at(comp);
        std::size_t src_dim = coh.betti(level, comp, src_deg);
        if (src_dim == 0) continue;
        for (const auto& [target, by_degree] : data.gysin) {
            int sign = removal_sign(comp.face, target.face);
            auto mit = by_degree.find(src_deg);
            if (mit == by_degree.end()) continue;  // zero map in this degree
            const RationalMatrix& block = mit->second;
            auto tpos = std::find(tgt.comps.begin(), tgt.comps.end(), target);
            if (tpos == tgt.comps.end())
                throw ShapeMismatch("Gysin target component {" + face_key(target.face) + ":" +
                                    target.label + "} has no cohomology data");
            std::size_t trow = tgt.offset[tpos - tgt.comps.begin()];
            std::size_t tgt_dim = coh.betti(level - 1, target, tgt_deg);
            if (block.rows() != tgt_dim || block.cols() != src_dim)
                throw ShapeMismatch("Gysin block {" + face_key(comp.face) + "}->{" +
                                    face_key(target.face) + "} degree " + std::to_string(src_deg) +
                                    " has shape " + std::to_string(block.rows()) + "x" +
                                    std::to_string(block.cols()) + ", expected " +
                                    std::to_string(tgt_dim) + "x" + std::to_string(src_dim));
            for (std::size_t i = 0; i < block.rows(); ++i)
                for (std::size_t j = 0; j < block.cols(); ++j)
                    d.at(trow + i, src.offset[ci] + j) +=
                        sign > 0 ? block.at(i, j) : -block.at(i, j);
        }
    }
    return d;
}

int max_degree(const StratumCohomology& coh) {
    int m = 0;
    for (const auto& [level, comps] : coh.levels())
        for (const auto& [comp, data] : comps)
            m = std::max(m, static_cast<int>(data.betti.size()) - 1 + 2 * level);
    return m;
}

}  // namespace

WeightTable weight_ss(const SncPair& pair, const StratumCohomology& coh) {
    int top = pair.nerve().max_face_size();
    if (!coh.levels().empty()) top = std::max(top, coh.levels().rbegin()->first);
    int qmax = max_degree(coh);
    WeightTable table;
    for (int q = 0; q <= qmax; ++q) {
        // d1 maps level -> level-1 along fixed q; check d1*d1 = 0 first.
        std::vector<RationalMatrix> d1(top + 1);
        for (int level = 0; level <= top; ++level) d1[level] = assemble_d1(coh, level, q);
        for (int level = 2; level <= top; ++level)
            if (!(d1[level - 1] * d1[level]).is_zero()) throw D1SquareNonzero(-level, q);
        for (int level = 0; level <= top; ++level) {
            std::size_t space_dim = level_basis(coh, level, q - 2 * level).offset.back();
            if (space_dim == 0) continue;
            std::size_t out_rank = d1[level].rank();
            std::size_t in_rank = level < top ? d1[level + 1].rank() : 0;
            std::size_t e2 = space_dim - out_rank - in_rank;
            if (e2 > 0) table.set(q - level, q, e2);
        }
    }
    return table;
}

TopWeightBasis top_weight_generators(const SncPair& pair, const StratumCohomology& coh, int k) {
    if (k < 0) throw ShapeMismatch("negative degree");
    TopWeightBasis result;
    LevelBasis lb = level_basis(coh, k, 0);
    for (std::size_t ci = 0; ci < lb.comps.size(); ++ci) {
        if (coh.betti(k, lb.comps[ci], 0) != 1)
            throw ShapeMismatch("component {" + face_key(lb.comps[ci].face) + ":" +
                                lb.comps[ci].label + "} must have H^0 of dimension 1");
        result.basis.push_back(lb.comps[ci]);
    }
    if (k == 0) {
        // E_1^{0,0} has no outgoing d1
        result.kernel = RationalSubspace::full(result.basis.size());
        return result;
    }
    (void)pair;
    result.kernel = kernel(assemble_d1(coh, k, 2 * k));
    return result;
}

bool check_bound(const WeightTable& table, int delta) {
    for (const auto& [key, d] : table.entries()) {
        auto [m, q] = key;
        if (q == 2 * m && d > binomial(delta, m)) return false;
    }
    return true;
}

std::size_t binomial(int n, int k) {
    if (k < 0 || n < 0 || k > n) return 0;
    std::size_t r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

}  // namespace wfl
