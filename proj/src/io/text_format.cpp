// SPDX-License-Identifier: Apache-2.0

#include "rankcrypt/io/text_format.hpp"

#include <fstream>
#include <sstream>

namespace rankcrypt::io {

namespace {

std::vector<std::vector<std::string>> tokenize(std::string_view text) {
  std::vector<std::vector<std::string>> rows;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    std::istringstream words(line);
    std::vector<std::string> row;
    std::string w;
    while (words >> w) row.push_back(w);
    if (row.empty() || row.front().starts_with('#')) continue;
    rows.push_back(std::move(row));
  }
  return rows;
}

template <linalg::Layer L, typename Parse>
linalg::Matrix<L> parse_matrix(const gf::TowerPtr& tower, std::string_view text, Parse parse) {
  const auto rows = tokenize(text);
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  std::vector<Elem> data;
  for (const auto& row : rows) {
    require(row.size() == cols, ErrorCode::Parse, "ragged matrix text");
    for (const auto& tok : row) data.push_back(parse(tok));
  }
  return linalg::Matrix<L>(tower, rows.size(), cols, std::move(data));
}

}  // namespace

std::string format_matrix(const linalg::BaseMatrix& a) {
  std::string out;
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) {
      if (c) out += ' ';
      out += std::to_string(a(r, c));
    }
    out += '\n';
  }
  return out;
}

std::string format_matrix(const linalg::ExtMatrix& a) {
  std::string out;
  for (std::size_t r = 0; r < a.rows(); ++r) {
    out += format_vector(a.field(), a.row(r));
    out += '\n';
  }
  return out;
}

linalg::BaseMatrix parse_base_matrix(const gf::TowerPtr& tower, std::string_view text) {
  return parse_matrix<linalg::Layer::Base>(tower, text, [&](const std::string& tok) {
    std::size_t used = 0;
    unsigned long v = 0;
    try {
      v = std::stoul(tok, &used);
    } catch (const std::exception&) {
      fail(ErrorCode::Parse, "bad matrix entry '" + tok + "'");
    }
    require(used == tok.size() && v < tower->q(), ErrorCode::Parse,
            "bad GF(q) matrix entry '" + tok + "'");
    return static_cast<Elem>(v);
  });
}

linalg::ExtMatrix parse_ext_matrix(const gf::TowerPtr& tower, std::string_view text) {
  return parse_matrix<linalg::Layer::Ext>(
      tower, text, [&](const std::string& tok) { return tower->parse_elem(tok); });
}

std::string format_vector(const gf::FieldTower& f, std::span<const Elem> v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ' ';
    out += f.format(v[i]);
  }
  return out;
}

std::string read_text(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  require(static_cast<bool>(in), ErrorCode::Io, "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text(const std::string& path, std::string_view content) {
  std::ofstream out(path, std::ios::binary);
  require(static_cast<bool>(out), ErrorCode::Io, "cannot write " + path);
  out << content;
}

}  // namespace rankcrypt::io
