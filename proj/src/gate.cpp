#include "splitting/gate.hpp"

#include "splitting/catalog.hpp"

namespace splitting {

Method commutator_method_4() { return catalog_method("COMM4"); }

Method commutator_method_5() {
    const Method m4 = commutator_method_4();
    return concat(m4, scale(m4, Coefficient(-1))).with_target(Target::Commutator);
}

OrderReport verify_commutator(const Method& m) { return order_of(m, Target::Commutator); }

} // namespace splitting
