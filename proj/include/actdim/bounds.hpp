#pragma once

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "actdim/coxeter.hpp"
#include "actdim/fungroup.hpp"
#include "actdim/nerve.hpp"

namespace actdim {

/// 2·rank − 1 for an irreducible finite type. Throws NotSpherical.
int spherical_actdim(const CoxeterType& t);
/// Rank of a finite type. Throws NotSpherical.
int spherical_gdim(const CoxeterType& t);
/// Rank of a finite matrix. Throws NotSpherical.
int spherical_gdim(const CoxeterMatrix& m);

struct LowerBound {
    int value = 0;
    std::vector<std::string> witness;  // vertex names of the witnessing simplex
    std::string rule;
};

/// Largest 2·dim σ + 1 over simplices with irreducible label; ties go to the
/// least simplex. With the product rule, also Σ (2·rank − 1) over the
/// components of each label.
LowerBound lower_bound(const NerveLabeling& n, bool use_product_rule = false);

enum class KPi1Status { VerifiedFlag, VerifiedSimplex, Asserted, Unknown };
std::string to_string(KPi1Status s);

KPi1Status kpi1_status(const SimplicialComplex& l, bool assert_kpi1);

struct UpperBound {
    std::optional<int> value;
    std::string rule;
};

/// Upper bound from the K(π,1) status, H^n(L) = 0 and, for n = 2, the π_1
/// generation certificate; 2n + 2 when only the K(π,1) status is available.
UpperBound upper_bound(const NerveLabeling& n, KPi1Status kpi1, bool top_coh_zero,
                       const std::optional<Certificate>& pi1);

struct RaagResult {
    std::optional<int> exact;
    std::optional<int> upper;
    int k = 0;
    std::size_t mod2_betti = 0;
};

/// Right-angled rule on top ℤ/2 homology (reduced in degree 0).
/// Throws NotRightAngled unless every finite label is 2 and L is flag.
RaagResult raag_rule(const NerveLabeling& n);

bool is_right_angled(const CoxeterMatrix& m);

struct Provenance {
    std::string rule;
    std::string quote;
};

struct BoundReport {
    int nerve_dim = 0;
    LowerBound lower;
    UpperBound upper;
    std::optional<int> exact;
    KPi1Status kpi1 = KPi1Status::Unknown;
    bool top_coh_zero = false;
    std::optional<Certificate> pi1;  // nullopt: not applicable (n ≠ 2)
    std::vector<Provenance> provenance;
};

struct ReportOptions {
    bool assert_kpi1 = false;
    bool product_rule = false;
    std::size_t tietze_budget = kDefaultTietzeBudget;
};

BoundReport report(const CoxeterMatrix& m, const ReportOptions& options = {});

nlohmann::ordered_json to_json(const BoundReport& r);
std::string format_report(const BoundReport& r);

}  // namespace actdim
