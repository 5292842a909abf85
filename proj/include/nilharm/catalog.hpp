#pragma once

#include <string>
#include <vector>

#include "nilharm/malcev.hpp"

namespace nilharm {

struct CatalogEntry {
    std::string name;
    std::string notes;
    LieAlgebra algebra;
    bool needs_rescale;
};

// Built-in examples: h3, h3_r1..h3_r3, filiform4..filiform7. Every entry
// passes build_algebra and, after rescaling where noted, the strongly-based
// validation.
const std::vector<CatalogEntry>& catalog();
const CatalogEntry& catalog_entry(const std::string& name);

LieAlgebra heisenberg3(int extra_central = 0);
LieAlgebra filiform(int n);

// Full preparation pipeline: locate the abelian ideal, build the Malcev
// basis, rescale to an integral lattice when necessary.
struct PreparedAlgebra {
    MalcevBasis basis;
    NilSetting setting;
    std::vector<Int> rescale;  // factors applied to the m-part (all 1 if none)
    bool rescaled;
};
PreparedAlgebra prepare(const LieAlgebra& g);

}  // namespace nilharm
