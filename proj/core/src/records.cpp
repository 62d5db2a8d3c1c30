#include "seidel/records.hpp"

#include <fstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace seidel {

using json = nlohmann::ordered_json;

std::string bits_hex(const SeidelMatrix& s) {
  int npairs = pair_count(s.order());
  int width = npairs == 0 ? 1 : (npairs + 3) / 4;
  std::string out(width, '0');
  static const char digits[] = "0123456789abcdef";
  const auto& words = s.words();
  for (int nib = 0; nib < width; ++nib) {
    int bit = nib * 4;
    unsigned v = 0;
    for (int b = 0; b < 4 && bit + b < npairs; ++b)
      if (!words.empty() && ((words[(bit + b) >> 6] >> ((bit + b) & 63)) & 1u))
        v |= 1u << b;
    out[width - 1 - nib] = digits[v];
  }
  return out;
}

SeidelMatrix matrix_from_hex(int n, const std::string& hex) {
  if (n < 0) throw std::invalid_argument("order must be nonnegative");
  int npairs = pair_count(n);
  SeidelMatrix s(n);
  int bit = 0;
  for (auto it = hex.rbegin(); it != hex.rend(); ++it) {
    char c = *it;
    unsigned v;
    if (c >= '0' && c <= '9')
      v = unsigned(c - '0');
    else if (c >= 'a' && c <= 'f')
      v = unsigned(c - 'a') + 10;
    else if (c >= 'A' && c <= 'F')
      v = unsigned(c - 'A') + 10;
    else
      throw std::invalid_argument("bad hex digit in matrix record");
    for (int b = 0; b < 4; ++b, ++bit)
      if ((v >> b) & 1u) {
        if (bit >= npairs) throw std::invalid_argument("bit string longer than upper triangle");
        s.flip_pair(bit);
      }
  }
  return s;
}

std::string to_record(const SeidelMatrix& s) {
  json j;
  j["n"] = s.order();
  j["bits"] = bits_hex(s);
  return j.dump();
}

SeidelMatrix parse_record(const std::string& line) {
  json j = json::parse(line);
  if (!j.contains("n") || !j.contains("bits") || !j["n"].is_number_integer() ||
      !j["bits"].is_string())
    throw std::invalid_argument("matrix record needs integer \"n\" and hex \"bits\"");
  return matrix_from_hex(j["n"].get<int>(), j["bits"].get<std::string>());
}

namespace {

IntPolynomial poly_from_json(const json& arr) {
  std::vector<Int> c;
  for (const auto& v : arr) {
    if (v.is_string())
      c.emplace_back(v.get<std::string>());
    else
      c.emplace_back(v.get<long long>());
  }
  return IntPolynomial(std::move(c));
}

Int int_from_json(const json& v) {
  if (v.is_string()) return Int(v.get<std::string>());
  return Int(v.get<long long>());
}

}  // namespace

Fixture load_fixture(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open fixture: " + path);
  json j = json::parse(in);
  Fixture f;
  f.kind = j.at("kind").get<std::string>();
  if (f.kind == "sqrt_det_sets") {
    for (const auto& row : j.at("rows")) {
      DetRowFixture r;
      r.n = row.at("n").get<int>();
      for (const auto& v : row.at("sqrt_dets")) r.sqrt_dets.push_back(v.get<long long>());
      f.det_rows.push_back(std::move(r));
    }
  } else if (f.kind == "charpoly_sets") {
    for (const auto& row : j.at("rows")) {
      CharpolySetFixture r;
      r.n = row.at("n").get<int>();
      for (const auto& p : row.at("polys")) r.polys.push_back(poly_from_json(p));
      f.charpoly_rows.push_back(std::move(r));
    }
  } else if (f.kind == "charpoly_coeffs") {
    f.coeffs.n = j.at("n").get<int>();
    for (const auto& d : j.at("degrees")) f.coeffs.degrees.push_back(d.get<int>());
    for (const auto& t : j.at("tuples")) {
      std::vector<long long> tuple;
      for (const auto& v : t) tuple.push_back(v.get<long long>());
      if (tuple.size() != f.coeffs.degrees.size())
        throw std::runtime_error("coefficient tuple arity mismatch in " + path);
      f.coeffs.tuples.push_back(std::move(tuple));
    }
  } else if (f.kind == "moment_table") {
    for (const auto& row : j.at("rows")) {
      MomentRowFixture r;
      r.n = row.at("n").get<int>();
      r.y = int_from_json(row.at("y"));
      r.z = int_from_json(row.at("z"));
      f.moment_rows.push_back(std::move(r));
    }
  } else {
    throw std::runtime_error("unknown fixture kind: " + f.kind);
  }
  return f;
}

}  // namespace seidel
