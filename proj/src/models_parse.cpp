/**
 * @file  models_parse.cpp
 * @brief Model selection strings:
 *          "sf"                      symplectic fermions
 *          "fb[:<rank or gram>]"     logarithmic free bosons
 *          "lat[:<gram>]"            lattice algebra (default rank 1, |a|^2 = 1)
 *          "gl[:beta=<p/q>]"         Gurarie-Ludwig (beta formal by default)
 *          "tensor(<m>,<m>)"         tensor product
 *        Gram matrices are written row-wise: "1,0;0,2"; a bare integer n means
 *        rank n identity for fb and the 1x1 matrix [n] for lat.
 */
#include <sstream>
#include <stdexcept>

#include "logva/models.hpp"

namespace logva {

namespace {

std::vector<std::vector<Rat>> parse_gram_rat(const std::string& s) {
  std::vector<std::vector<Rat>> rows;
  std::stringstream ss(s);
  std::string row;
  while (std::getline(ss, row, ';')) {
    std::vector<Rat> r;
    std::stringstream rs(row);
    std::string cell;
    while (std::getline(rs, cell, ',')) {
      Rat q(cell);
      q.canonicalize();
      r.push_back(q);
    }
    rows.push_back(std::move(r));
  }
  for (const auto& r : rows)
    if (r.size() != rows.size())
      throw std::invalid_argument("gram matrix is not square: " + s);
  return rows;
}

bool is_integer(const std::string& s) {
  if (s.empty()) return false;
  size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (!isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

}  // namespace

Model parse_model(const std::string& spec) {
  if (spec == "sf") return symplectic_fermions();

  if (spec == "fb") return free_boson({{Rat(1)}});
  if (spec.rfind("fb:", 0) == 0) {
    std::string arg = spec.substr(3);
    if (is_integer(arg)) {
      int r = std::stoi(arg);
      if (r < 1) throw std::invalid_argument("fb rank must be >= 1");
      std::vector<std::vector<Rat>> g(static_cast<size_t>(r),
                                      std::vector<Rat>(static_cast<size_t>(r), Rat(0)));
      for (int i = 0; i < r; ++i) g[static_cast<size_t>(i)][static_cast<size_t>(i)] = 1;
      return free_boson(g);
    }
    return free_boson(parse_gram_rat(arg));
  }

  if (spec == "lat") return lattice_logva({{1}});
  if (spec.rfind("lat:", 0) == 0) {
    std::string arg = spec.substr(4);
    std::vector<std::vector<Int>> g;
    if (is_integer(arg)) {
      g = {{static_cast<Int>(std::stoll(arg))}};
    } else {
      auto rq = parse_gram_rat(arg);
      g.resize(rq.size());
      for (size_t i = 0; i < rq.size(); ++i)
        for (const Rat& q : rq[i]) {
          if (q.get_den() != 1)
            throw std::invalid_argument("lattice gram must be integral: " + spec);
          g[i].push_back(static_cast<Int>(q.get_num().get_si()));
        }
    }
    return lattice_logva(g);
  }

  if (spec == "gl") return gurarie_ludwig();
  if (spec.rfind("gl:", 0) == 0) {
    std::string arg = spec.substr(3);
    if (arg.rfind("beta=", 0) != 0)
      throw std::invalid_argument("expected gl:beta=<p/q>: " + spec);
    Rat b(arg.substr(5));
    b.canonicalize();
    return gurarie_ludwig(b);
  }

  if (spec.rfind("tensor(", 0) == 0 && spec.back() == ')') {
    std::string inner = spec.substr(7, spec.size() - 8);
    int depth = 0;
    size_t cut = std::string::npos;
    for (size_t i = 0; i < inner.size(); ++i) {
      if (inner[i] == '(') ++depth;
      else if (inner[i] == ')') --depth;
      else if (inner[i] == ',' && depth == 0) {
        cut = i;
        break;
      }
    }
    if (cut == std::string::npos)
      throw std::invalid_argument("tensor(...) needs two models: " + spec);
    Model a = parse_model(inner.substr(0, cut));
    Model b = parse_model(inner.substr(cut + 1));
    return tensor_product(a, b);
  }

  throw std::invalid_argument("unknown model: " + spec);
}

}  // namespace logva
