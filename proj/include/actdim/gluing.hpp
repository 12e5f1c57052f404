#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "actdim/complex.hpp"

namespace actdim {

/// Piece M(D_σ) = M_σ × Th D_σ for a simplex σ of dimension i in a complex of dimension d.
struct StratumPiece {
    Simplex simplex;
    int i = 0;
    int dim_local = 0;       // 2i + 1
    int dim_thickening = 0;  // 2(d − i)
    int dim_total = 0;
    int h = 0;               // dimension of the nerve face carrying the local group; −1 for the trivial group
    int base_dim = 0;        // dim M_ρ = 2h + 1, or 0 for the trivial group
    int disk_dim = 0;        // 2i − 2h, completing the local dimension
};

/// Gluing region along a face pair σ < τ: M_σ × D^{2(j−i)−1} × D^{2(d−j)}.
struct InterfaceSpec {
    Simplex face;
    Simplex coface;
    int i = 0;
    int j = 0;
    int local = 0;
    int link = 0;
    int normal = 0;
    int total = 0;
};

struct DemandEntry {
    Simplex simplex;
    std::vector<Simplex> faces;  // proper faces σ < τ
    std::vector<std::size_t> sub_demand;  // #{π < ρ} for each listed face ρ
};

struct GluingLedger {
    SimplicialComplex complex;
    int d = 0;
    std::vector<StratumPiece> pieces;
    std::vector<InterfaceSpec> interfaces;
    std::vector<DemandEntry> demands;
};

/// Builds pieces, interfaces and copy demands for every simplex. When
/// `extended_dims` is given it supplies h for each simplex (missing entries
/// mean h = i). Throws EmptyComplex.
GluingLedger build_ledger(const SimplicialComplex& k,
                          const std::optional<std::map<Simplex, int>>& extended_dims = std::nullopt);

struct LedgerCheck {
    std::string name;
    bool passed = true;
    std::size_t checked = 0;
    std::size_t failures = 0;
};

struct LedgerReport {
    std::vector<LedgerCheck> checks;
    bool passed() const;
};

/// (a) piece totals 2d+1, (b) interface totals 2d, (c) thickened-link
/// splitting matches the interface factors, (d) demand counts match the face
/// poset, (e) local splits add up.
LedgerReport verify_ledger(const GluingLedger& g);

nlohmann::ordered_json to_json(const GluingLedger& g, const LedgerReport& report);

}  // namespace actdim
