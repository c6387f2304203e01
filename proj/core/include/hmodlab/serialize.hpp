// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "hmodlab/func_lin.hpp"
#include "hmodlab/interval.hpp"
#include "hmodlab/module.hpp"
#include "hmodlab/pwl.hpp"

#include <nlohmann/json.hpp>

namespace hmod {

using Json = nlohmann::ordered_json;

// Rationals are "num/den" strings everywhere.

/// [[t, v], ...]
Json to_json(const PwlFunc& f);
PwlFunc pwl_from_json(const Json& j);

/// {"kind": "pwl"|"sqrt", "points": [...]} or {"kind": "product", "factors": [...]}
Json to_json(const Atom& a);

/// [{"coefficient": "num/den", "atom": {...}}, ...]
Json to_json(const FuncLin& x);
FuncLin funclin_from_json(const Json& j);

/// {"0": FuncLin, "n:m": FuncLin, ...}
Json to_json(const ModuleElement& x);
ModuleElement module_element_from_json(const Json& j);

/// Number of fractional decimal digits used when printing intervals.
inline constexpr unsigned kIntervalDigits = 24;

/// ["lo", "hi"] as decimal strings rounded outward.
Json interval_to_json(const Interval& i, unsigned digits = kIntervalDigits);

}  // namespace hmod
