#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "weightfilt/subspace.hpp"

namespace wfl {

// A face is a sorted set of component indices (1-based). The empty face
// stands for the ambient space itself and only appears at level 0 of the
// stratum cohomology, never in a nerve.
using Face = std::vector<int>;

std::string face_key(const Face& f);          // "1,3" (empty face -> "")
Face face_from_key(const std::string& key);

// Nerve of a simple normal crossings divisor: which intersections Y_I are
// nonempty, and the labels of their connected components. Faces must be
// closed under passing to nonempty subsets and every singleton {i}, i <= n,
// must be present.
class Nerve {
  public:
    Nerve(int n, std::set<Face> faces, std::map<Face, std::vector<std::string>> components);

    int n() const { return n_; }
    const std::set<Face>& faces() const { return faces_; }
    bool has_face(const Face& f) const { return faces_.count(f) > 0; }
    const std::vector<std::string>& components_of(const Face& f) const;

    int max_face_size() const;
    bool check_closure() const;  // re-assertable constructor invariant

  private:
    int n_;
    std::set<Face> faces_;
    std::map<Face, std::vector<std::string>> components_;
};

// A connected component of a stratum: the face and the component label.
struct StratumComponent {
    Face face;
    std::string label;
    auto operator<=>(const StratumComponent&) const = default;
};

// One rational curve record for the condition-(*) graph: a curve inside
// Y^level meeting Y^{level+1} in the two endpoint stratum components, whose
// faces have size level + 1.
struct CurveRecord {
    int level;
    StratumComponent end1, end2;
};

class SncPair {
  public:
    SncPair(Nerve nerve, bool is_log_cy, std::vector<CurveRecord> curves);

    const Nerve& nerve() const { return nerve_; }
    bool is_log_cy() const { return is_log_cy_; }
    const std::vector<CurveRecord>& curves() const { return curves_; }

  private:
    Nerve nerve_;
    bool is_log_cy_;
    std::vector<CurveRecord> curves_;
};

struct ProfoundTorus {
    StratumComponent component;
    int dim;  // |I| for a pair (X,Y)
};

struct StrataInfo {
    std::vector<StratumComponent> minimal;  // components of minimal strata
    std::vector<ProfoundTorus> profound;
    int delta;  // max face size
};

// Minimal strata are faces with no strict superset in the nerve; one
// profound torus per minimal stratum component.
StrataInfo stratify(const SncPair& pair);

struct StarReport {
    bool ok;
    std::string reason;  // empty when ok
};

// Condition (*): all minimal strata have the same size j and the graph on
// minimal stratum components whose edges are the level-(j-1) curves is
// connected.
StarReport check_star_condition(const SncPair& pair);

// Per-stratum Betti data and Gysin maps, the user-supplied d1 input of the
// weight spectral sequence. Levels are indexed by face size; level 0 holds
// the ambient space under the empty face. A Gysin block absent from the map
// is the zero map.
class StratumCohomology {
  public:
    struct ComponentData {
        std::vector<std::size_t> betti;  // betti[q] = dim H^q, trailing zeros implied
        // target component (one level down) -> degree q -> matrix
        // H^q(source) -> H^{q+2}(target)
        std::map<StratumComponent, std::map<int, RationalMatrix>> gysin;
    };

    void set_component(int level, StratumComponent comp, ComponentData data);
    const std::map<int, std::map<StratumComponent, ComponentData>>& levels() const {
        return levels_;
    }
    std::size_t betti(int level, const StratumComponent& comp, int q) const;

  private:
    std::map<int, std::map<StratumComponent, ComponentData>> levels_;
};

// dim Gr^W_q H^m(X \ Y; Q) indexed by (m, q). Entries outside m <= q <= 2m
// are rejected.
class WeightTable {
  public:
    void set(int m, int q, std::size_t dim);
    std::size_t dim(int m, int q) const;
    std::size_t betti(int m) const;  // sum over q
    const std::map<std::pair<int, int>, std::size_t>& entries() const { return entries_; }

  private:
    std::map<std::pair<int, int>, std::size_t> entries_;
};

// The weight spectral sequence E_1^{p,q} = H^{2p+q}(normalized p-fold
// intersections), p <= 0, with d1 the signed sum of Gysin maps; it
// degenerates at E_2 and E_2^{p,q} = Gr^W_q H^{p+q}. The Gysin map removing
// the r-th smallest index from a face carries the sign (-1)^{r-1}; the
// assembled d1 must square to zero (D1SquareNonzero otherwise).
WeightTable weight_ss(const SncPair& pair, const StratumCohomology& coh);

struct TopWeightBasis {
    // One basis vector of E_1^{-k,2k} per component of the k-fold strata,
    // the class dual to the torus T_I; kernel realizes Gr^W_{2k} H^k in
    // these coordinates.
    std::vector<StratumComponent> basis;
    RationalSubspace kernel;
};

TopWeightBasis top_weight_generators(const SncPair& pair, const StratumCohomology& coh, int k);

// Corollary bound: dim Gr^W_{2k} H^k <= C(delta, k) for all k. Meaningful
// for log Calabi-Yau (or (*)-verified) inputs.
bool check_bound(const WeightTable& table, int delta);

std::size_t binomial(int n, int k);

}  // namespace wfl
