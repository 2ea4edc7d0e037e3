#include "liewave/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <openssl/evp.h>

#include "liewave/error.hpp"

namespace liewave {

std::string format_double(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

Json coefficients_to_json(const FourierCoefficients& c) {
  Json out = Json::array();
  for (const auto& [rep, block] : c.blocks()) {
    Json rec;
    rec["group"] = to_string(rep.group);
    if (rep.group == GroupKind::su2)
      rec["two_ell"] = rep.two_ell;
    else
      rec["k"] = rep.k;
    Json rows = Json::array();
    for (int i = 0; i < block.rows(); ++i) {
      Json row = Json::array();
      for (int j = 0; j < block.cols(); ++j) row.push_back({block(i, j).real(), block(i, j).imag()});
      rows.push_back(std::move(row));
    }
    rec["matrix"] = std::move(rows);
    out.push_back(std::move(rec));
  }
  return out;
}

FourierCoefficients coefficients_from_json(const Json& j, const Band& band) {
  if (!j.is_array()) fail(ErrorCode::config, "coefficient document must be an array of records");
  FourierCoefficients c(band);
  for (std::size_t n = 0; n < j.size(); ++n) {
    const Json& rec = j[n];
    const std::string where = "/" + std::to_string(n);
    try {
      const GroupKind g = group_from_string(rec.at("group").get<std::string>());
      const RepIndex rep = g == GroupKind::su2 ? RepIndex::su2(rec.at("two_ell").get<int>())
                                               : RepIndex::torus(rec.at("k").get<std::vector<int>>());
      const Json& m = rec.at("matrix");
      if (!m.is_array() || static_cast<int>(m.size()) != rep.dim())
        fail(ErrorCode::config, where + "/matrix: expected " + std::to_string(rep.dim()) + " rows");
      CMatrix block(rep.dim(), rep.dim());
      for (int r = 0; r < rep.dim(); ++r) {
        const Json& row = m[static_cast<std::size_t>(r)];
        if (!row.is_array() || static_cast<int>(row.size()) != rep.dim())
          fail(ErrorCode::config, where + "/matrix/" + std::to_string(r) + ": wrong row length");
        for (int col = 0; col < rep.dim(); ++col) {
          const Json& z = row[static_cast<std::size_t>(col)];
          block(r, col) = Complex(z.at(0).get<double>(), z.at(1).get<double>());
        }
      }
      c.set(rep, std::move(block));
    } catch (const nlohmann::json::exception& e) {
      fail(ErrorCode::config, where + ": " + e.what());
    }
  }
  return c;
}

Json symbol_to_json(const DiagonalSymbol& s) {
  Json out = Json::array();
  for (const auto& [rep, nu2] : s.nu_squared) {
    Json rec;
    if (rep.group == GroupKind::su2)
      rec["two_ell"] = rep.two_ell;
    else
      rec["k"] = rep.k;
    rec["nu_squared"] = nu2;
    rec["jap"] = s.jap(rep);
    out.push_back(std::move(rec));
  }
  return out;
}

std::string dump_json(const Json& j) { return j.dump(2) + "\n"; }

std::string sha256_hex(const std::string& data) {
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(data.data(), data.size(), md, &len, EVP_sha256(), nullptr) != 1)
    fail(ErrorCode::io, "SHA-256 digest failed");
  static const char* hex = "0123456789abcdef";
  std::string out;
  for (unsigned int i = 0; i < len; ++i) {
    out.push_back(hex[md[i] >> 4]);
    out.push_back(hex[md[i] & 15]);
  }
  return out;
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream f(path, std::ios::binary);
  if (!f) fail(ErrorCode::io, "cannot open '" + path + "' for writing");
  f << content;
  if (!f) fail(ErrorCode::io, "write to '" + path + "' failed");
}

std::string read_text_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) fail(ErrorCode::io, "cannot open '" + path + "'");
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

std::string csv_row(const std::vector<std::string>& cells) {
  std::string out;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i) out.push_back(',');
    out += cells[i];
  }
  out.push_back('\n');
  return out;
}

}  // namespace liewave
