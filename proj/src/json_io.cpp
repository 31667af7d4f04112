#include "abdkit/json_io.hpp"

#include <cstdint>
#include <fstream>
#include <set>
#include <sstream>
#include <tuple>

#include "abdkit/errors.hpp"

namespace abdkit {

namespace {

[[noreturn]] void bad(const std::string& msg) { throw InputError(msg); }

std::size_t get_size(const ojson& j, const char* key) {
  if (!j.contains(key)) bad(std::string("missing field '") + key + "'");
  const ojson& v = j.at(key);
  // Parsed non-negative literals arrive as unsigned; values built in memory
  // may carry a signed integer type, so accept those too when >= 0.
  if (!v.is_number_unsigned() &&
      !(v.is_number_integer() && v.get<long long>() >= 0)) {
    bad(std::string("field '") + key + "' must be a non-negative integer");
  }
  return v.get<std::size_t>();
}

Rat rat_from(const ojson& v, const std::string& where) {
  if (!v.is_string()) {
    bad(where + ": rational values must be strings like \"p\" or \"p/q\"");
  }
  return Rat::parse(v.get<std::string>());
}

// Reads a triple list [[i, j, k, "p/q"], ...] with bounds (n1, n2, n3) into
// the flat table `flat` (index ((i*n2)+j)*n3+k), rejecting duplicates.
void read_triples(const ojson& j, const char* key, std::size_t n1,
                  std::size_t n2, std::size_t n3, std::vector<Rat>& flat) {
  if (!j.contains(key)) bad(std::string("missing field '") + key + "'");
  const ojson& arr = j.at(key);
  if (!arr.is_array()) bad(std::string("field '") + key + "' must be an array");
  std::set<std::tuple<std::size_t, std::size_t, std::size_t>> seen;
  for (const ojson& item : arr) {
    if (!item.is_array() || item.size() != 4) {
      bad(std::string(key) + " entries must be [i, j, k, \"p/q\"]");
    }
    for (int t = 0; t < 3; ++t) {
      if (!item.at(t).is_number_unsigned()) {
        bad(std::string(key) + " indices must be non-negative integers");
      }
    }
    std::size_t i = item.at(0).get<std::size_t>();
    std::size_t jj = item.at(1).get<std::size_t>();
    std::size_t k = item.at(2).get<std::size_t>();
    if (i >= n1 || jj >= n2 || k >= n3) {
      std::ostringstream os;
      os << key << " entry [" << i << ", " << jj << ", " << k
         << "] is out of range";
      bad(os.str());
    }
    if (!seen.insert({i, jj, k}).second) {
      std::ostringstream os;
      os << "duplicate " << key << " entry for indices [" << i << ", " << jj
         << ", " << k << "]";
      bad(os.str());
    }
    flat[(i * n2 + jj) * n3 + k] = rat_from(item.at(3), key);
  }
}

}  // namespace

ojson parse_json_text(const std::string& text) {
  try {
    return ojson::parse(text);
  } catch (const ojson::exception& e) {
    throw InputError(std::string("JSON parse error: ") + e.what());
  }
}

std::string read_file_bytes(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read file: " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

ojson load_json_file(const std::string& path) {
  return parse_json_text(read_file_bytes(path));
}

Algebra algebra_from_json(const ojson& j) {
  if (!j.is_object()) bad("algebra JSON must be an object");
  std::size_t n = get_size(j, "dim");
  std::string label;
  if (j.contains("label")) {
    if (!j.at("label").is_string()) bad("field 'label' must be a string");
    label = j.at("label").get<std::string>();
  }
  Algebra a(n, label);
  read_triples(j, "products", n, n, n, a.c);
  return a;
}

ojson triples_from_flat(const std::vector<Rat>& flat, std::size_t n1,
                        std::size_t n2, std::size_t n3) {
  ojson arr = ojson::array();
  for (std::size_t i = 0; i < n1; ++i) {
    for (std::size_t j = 0; j < n2; ++j) {
      for (std::size_t k = 0; k < n3; ++k) {
        const Rat& q = flat[(i * n2 + j) * n3 + k];
        if (q.is_zero()) continue;
        arr.push_back(ojson::array({i, j, k, q.str()}));
      }
    }
  }
  return arr;
}

ojson algebra_to_json(const Algebra& a) {
  ojson j;
  j["dim"] = a.dim;
  j["label"] = a.label;
  j["products"] = triples_from_flat(a.c, a.dim, a.dim, a.dim);
  return j;
}

namespace {

Monomial tree_from_json(const ojson& t, int arity) {
  if (t.is_number_unsigned()) {
    int v = t.get<int>();
    if (v >= arity) {
      std::ostringstream os;
      os << "leaf index " << v << " out of range for arity " << arity;
      bad(os.str());
    }
    return Monomial::leaf(v);
  }
  if (t.is_array() && t.size() == 2) {
    Monomial l = tree_from_json(t.at(0), arity);
    Monomial r = tree_from_json(t.at(1), arity);
    return Monomial::node(l, r);
  }
  bad("identity tree nodes must be leaf indices or two-element arrays");
}

ojson tree_to_json(const Monomial& m) {
  // The postfix encoding uses -1 for an internal node; rebuild nested pairs.
  std::vector<ojson> stack;
  for (int v : m.post) {
    if (v >= 0) {
      stack.push_back(ojson(static_cast<unsigned>(v)));
    } else {
      ojson r = stack.back();
      stack.pop_back();
      ojson l = stack.back();
      stack.pop_back();
      stack.push_back(ojson::array({l, r}));
    }
  }
  return stack.back();
}

}  // namespace

Identity identity_from_json(const ojson& j) {
  if (!j.is_object()) bad("identity JSON must be an object");
  std::size_t arity = get_size(j, "arity");
  if (arity == 0) bad("identity arity must be positive");
  Identity id;
  id.arity = static_cast<int>(arity);
  if (!j.contains("terms") || !j.at("terms").is_array()) {
    bad("field 'terms' must be an array");
  }
  for (const ojson& t : j.at("terms")) {
    if (!t.is_object() || !t.contains("coeff") || !t.contains("tree")) {
      bad("identity terms must be objects with 'coeff' and 'tree'");
    }
    Term term;
    term.coeff = rat_from(t.at("coeff"), "terms");
    term.mono = tree_from_json(t.at("tree"), id.arity);
    id.terms.push_back(std::move(term));
  }
  return id;
}

ojson identity_to_json(const Identity& id) {
  ojson j;
  j["arity"] = id.arity;
  ojson terms = ojson::array();
  for (const Term& t : id.terms) {
    ojson term;
    term["coeff"] = t.coeff.str();
    term["tree"] = tree_to_json(t.mono);
    terms.push_back(term);
  }
  j["terms"] = terms;
  return j;
}

CocycleData cocycle_from_json(const ojson& j) {
  if (!j.is_object()) bad("cocycle JSON must be an object");
  CocycleData d;
  if (!j.contains("base")) bad("missing field 'base'");
  d.base = algebra_from_json(j.at("base"));
  d.fiber_dim = get_size(j, "fiber_dim");
  d.beta.assign(d.base.dim * d.base.dim * d.fiber_dim, Rat(0));
  read_triples(j, "beta", d.base.dim, d.base.dim, d.fiber_dim, d.beta);
  return d;
}

ojson cocycle_to_json(const CocycleData& d) {
  ojson j;
  j["base"] = algebra_to_json(d.base);
  j["fiber_dim"] = d.fiber_dim;
  j["beta"] = triples_from_flat(d.beta, d.base.dim, d.base.dim, d.fiber_dim);
  return j;
}

ExtensionData extension_from_json(const ojson& j) {
  ExtensionData d;
  d.cocycle = cocycle_from_json(j);
  std::size_t total = d.cocycle.base.dim + d.cocycle.fiber_dim;
  d.bracket.assign(total * total * d.cocycle.fiber_dim, Rat(0));
  read_triples(j, "bracket", total, total, d.cocycle.fiber_dim, d.bracket);
  return d;
}

ojson extension_to_json(const ExtensionData& d) {
  ojson j = cocycle_to_json(d.cocycle);
  std::size_t total = d.cocycle.base.dim + d.cocycle.fiber_dim;
  j["bracket"] =
      triples_from_flat(d.bracket, total, total, d.cocycle.fiber_dim);
  return j;
}

ojson qvec_to_json(const QVec& v) {
  ojson arr = ojson::array();
  for (const Rat& q : v) arr.push_back(q.str());
  return arr;
}

ojson qmatrix_to_json(const QMatrix& m) {
  ojson arr = ojson::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    ojson row = ojson::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m.at(i, j).str());
    arr.push_back(row);
  }
  return arr;
}

std::string fnv1a_hex(const std::string& bytes) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char b : bytes) {
    h ^= static_cast<std::uint64_t>(b);
    h *= 1099511628211ull;
  }
  static const char* hex = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i) {
    out[static_cast<std::size_t>(i)] = hex[h & 0xf];
    h >>= 4;
  }
  return out;
}

}  // namespace abdkit
