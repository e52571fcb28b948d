// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "rankcrypt/linalg/matrix.hpp"

namespace rankcrypt::gf {

/// Expands each element of v into a row of m base-field digits (power
/// basis 1, a, ..., a^(m-1)), giving an l x m matrix over GF(q).
linalg::BaseMatrix phi_expand(const TowerPtr& tower, std::span<const Elem> v);

/// Inverse of phi_expand; requires exactly m columns.
std::vector<Elem> phi_contract(const linalg::BaseMatrix& a);

/// Entry-wise expansion of an l x r matrix into an l x (r m) matrix.
linalg::BaseMatrix phi_expand(const linalg::ExtMatrix& a);
linalg::ExtMatrix phi_contract_blocks(const linalg::BaseMatrix& a, std::size_t r);

}  // namespace rankcrypt::gf
