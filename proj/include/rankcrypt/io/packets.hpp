// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "rankcrypt/gf/field_tower.hpp"

namespace rankcrypt::io {

// Packet files hold one byte per base-field digit (q <= 256). Each symbol
// of GF(q^m) is one packet of m digits written most significant first (the
// coefficient of a^(m-1) leads). Files are whole blocks of a fixed number of
// packets.

std::vector<std::uint8_t> pack_symbols(const gf::FieldTower& f, std::span<const Elem> symbols);

/// Throws ShapeMismatch unless the byte count is a whole number of blocks of
/// per_block packets, and Parse for digits >= q.
std::vector<Elem> unpack_symbols(const gf::FieldTower& f, std::span<const std::uint8_t> bytes,
                                 std::size_t per_block);

std::vector<std::uint8_t> read_bytes(const std::string& path);
void write_bytes(const std::string& path, std::span<const std::uint8_t> bytes);

}  // namespace rankcrypt::io
