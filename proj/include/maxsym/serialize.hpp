#pragma once

#include <json.hpp>

#include "maxsym/hamilton.hpp"

namespace maxsym {

using Json = nlohmann::ordered_json;

// Poly <-> {terms:[{exps:[[name,power]...], num, den}]}
Json to_json(const Poly& p, const Chart& chart);
Poly poly_from_json(const Json& j, const Chart& chart);

// Form/Multivector <-> {degree, monomials:[{factors:[names], coeff:<poly>}]}
Json to_json(const Form& f);
Json to_json(const Multivector& f);
Form form_from_json(const Json& j, const ChartPtr& chart);
Multivector multivector_from_json(const Json& j, const ChartPtr& chart);

// Chart -> {flavor, n, coords:[{name, role, indices}], constraints:[...]}
Json to_json(const Chart& chart);

// PDESystem -> {relations:[{lhs, rhs, provenance}], chart, hamiltonian-ref}
Json to_json(const PDESystem& sys);

std::string role_name(Role r);

}  // namespace maxsym
