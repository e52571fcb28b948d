// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>
#include <string_view>

#include "rankcrypt/linalg/matrix.hpp"

namespace rankcrypt::io {

// Matrix text: one row per line, entries separated by spaces. GF(q) entries
// are plain integers, GF(q^m) entries are ascending digit strings ("010" is
// a in GF(2^3)). Blank lines and lines starting with '#' are ignored.
std::string format_matrix(const linalg::BaseMatrix& a);
std::string format_matrix(const linalg::ExtMatrix& a);
linalg::BaseMatrix parse_base_matrix(const gf::TowerPtr& tower, std::string_view text);
linalg::ExtMatrix parse_ext_matrix(const gf::TowerPtr& tower, std::string_view text);

std::string format_vector(const gf::FieldTower& f, std::span<const Elem> v);

std::string read_text(const std::string& path);
void write_text(const std::string& path, std::string_view content);

}  // namespace rankcrypt::io
