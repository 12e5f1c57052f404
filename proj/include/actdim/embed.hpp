#pragma once

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "actdim/complex.hpp"
#include "actdim/fungroup.hpp"

namespace actdim {

enum class EmbedStatus { Embeddable, NotEmbeddable, ConditionalUnknown };
std::string to_string(EmbedStatus s);

struct Embeddability {
    EmbedStatus status = EmbedStatus::ConditionalUnknown;
    std::string reason;
};

/// Whether K embeds in a contractible complex of its own dimension d:
/// decided by H^d(K) for d ≠ 2; for d = 2 also needs π_1 normally generated
/// by rk H_1 elements (checked after joining the components by edges).
Embeddability embeddable_in_contractible(const SimplicialComplex& k);

struct EmbedResult {
    EmbedStatus status = EmbedStatus::ConditionalUnknown;
    std::optional<SimplicialComplex> complex;
    bool acyclic = false;
    std::optional<Certificate> pi1;
    std::vector<std::string> trace;
};

/// Forest to tree: joins every other component to the least vertex of the
/// first one by an edge. Throws NotApplicable unless dim ≤ 1 and H^1 = 0.
EmbedResult embed_dim1(const SimplicialComplex& k);

inline constexpr int kDefaultEmbedBudget = 50;

/// Builds a contractible C ⊇ K with dim C = dim K by joining components,
/// coning off surviving π_1 generator loops and coning off supports of
/// non-bounding cycles, then certifies C. Throws NotApplicable when K is
/// not Embeddable or dim K < 2, BudgetExhausted when no certificate is reached.
EmbedResult embed_general(const SimplicialComplex& k, int budget = kDefaultEmbedBudget);

nlohmann::ordered_json to_json(const EmbedResult& r);

}  // namespace actdim
