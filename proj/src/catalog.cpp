#include "abdkit/catalog.hpp"

#include <map>
#include <set>
#include <sstream>

#include "abdkit/errors.hpp"
#include "abdkit/identities.hpp"

namespace abdkit::catalog {

namespace {

// 1-based convenience setter: e_i * e_j = ... + q e_k.
void add(Algebra& a, std::size_t i, std::size_t j, std::size_t k, long q) {
  a.cref(i - 1, j - 1, k - 1) = Rat(q);
}

Algebra make_a3_3(const Rat& alpha, const std::string& label) {
  if (alpha.is_zero()) {
    throw InputError("catalog: the parameter of A3_3 must be nonzero");
  }
  Algebra a(3, label);
  add(a, 1, 1, 2, 1);
  a.cref(0, 2, 1) = alpha;
  a.cref(2, 0, 1) = -alpha;
  add(a, 3, 3, 2, 1);
  return a;
}

using Flags = std::vector<std::pair<std::string, bool>>;

Flags with_common(Flags specific) {
  Flags out = {{"abd", true}, {"nil3", true}, {"jj_admissible", true}};
  for (auto& f : specific) out.push_back(std::move(f));
  return out;
}

std::vector<Entry> build_entries() {
  std::vector<Entry> out;

  {
    Entry e;
    e.key = "A2_1";
    Algebra a(2, e.key);
    add(a, 1, 1, 2, 1);
    e.algebra = a;
    e.claimed_flags = with_common({{"commutative", true},
                                   {"anticommutative", false},
                                   {"jacobi", true},
                                   {"flexible", true},
                                   {"aflexible", true},
                                   {"symmetric_anti_leibniz", true},
                                   {"symmetric_leibniz", true},
                                   {"alr", true},
                                   {"antiassociative", true}});
    e.claimed_nilpotent = true;
    e.claimed_class = 2;
    e.claimed_dim_derived = 1;
    e.claimed_dim_ann = 1;
    out.push_back(std::move(e));
  }

  {
    Entry e;
    e.key = "A2_2";
    Algebra a(2, e.key);
    add(a, 1, 2, 2, 1);
    add(a, 2, 1, 2, -1);
    e.algebra = a;
    e.claimed_flags = with_common({{"commutative", false},
                                   {"anticommutative", true},
                                   {"jacobi", true},
                                   {"flexible", true},
                                   {"aflexible", true},
                                   {"symmetric_anti_leibniz", false},
                                   {"symmetric_leibniz", true},
                                   {"alr", false}});
    e.claimed_nilpotent = false;
    e.claimed_dim_derived = 1;
    e.claimed_dim_ann = 0;
    out.push_back(std::move(e));
  }

  {
    Entry e;
    e.key = "A3_1";
    Algebra a(3, e.key);
    add(a, 1, 1, 2, 1);
    add(a, 1, 3, 3, 1);
    add(a, 3, 1, 3, -1);
    e.algebra = a;
    e.claimed_flags = with_common({{"commutative", false},
                                   {"anticommutative", false},
                                   {"jacobi", true},
                                   {"flexible", true},
                                   {"aflexible", true},
                                   {"symmetric_anti_leibniz", false},
                                   {"symmetric_leibniz", true},
                                   {"alr", false}});
    e.claimed_nilpotent = false;
    e.claimed_dim_derived = 2;
    e.claimed_dim_ann = 1;
    out.push_back(std::move(e));
  }

  Flags two_step = with_common({{"commutative", false},
                                {"anticommutative", false},
                                {"jacobi", true},
                                {"flexible", true},
                                {"aflexible", true},
                                {"symmetric_anti_leibniz", true},
                                {"symmetric_leibniz", true},
                                {"alr", true},
                                {"antiassociative", true}});

  {
    Entry e;
    e.key = "A3_2";
    Algebra a(3, e.key);
    add(a, 1, 1, 2, 1);
    add(a, 1, 3, 2, 1);
    add(a, 3, 1, 2, -1);
    e.algebra = a;
    e.claimed_flags = two_step;
    e.claimed_nilpotent = true;
    e.claimed_class = 2;
    e.claimed_dim_derived = 1;
    e.claimed_dim_ann = 1;
    out.push_back(std::move(e));
  }

  {
    Entry e;
    e.key = "A3_3(1)";
    e.algebra = make_a3_3(Rat(1), e.key);
    e.claimed_flags = two_step;
    e.claimed_nilpotent = true;
    e.claimed_class = 2;
    e.claimed_dim_derived = 1;
    e.claimed_dim_ann = 1;
    QMatrix p = QMatrix::identity(3);
    p.at(2, 2) = Rat(-1);
    e.witnesses.push_back({"A3_3(-1)", p});
    out.push_back(std::move(e));
  }

  {
    Entry e;
    e.key = "A3_3(-1)";
    e.algebra = make_a3_3(Rat(-1), e.key);
    e.claimed_flags = two_step;
    e.claimed_nilpotent = true;
    e.claimed_class = 2;
    e.claimed_dim_derived = 1;
    e.claimed_dim_ann = 1;
    out.push_back(std::move(e));
  }

  {
    Entry e;
    e.key = "A4_0";
    Algebra a(4, e.key);
    add(a, 1, 1, 2, 1);
    add(a, 1, 3, 3, -1);
    add(a, 1, 3, 4, 1);
    add(a, 1, 4, 4, 1);
    add(a, 2, 3, 4, 2);
    add(a, 3, 1, 3, 1);
    add(a, 3, 1, 4, 1);
    add(a, 3, 2, 4, -2);
    add(a, 4, 1, 4, -1);
    e.algebra = a;
    e.claimed_flags = with_common({{"commutative", false},
                                   {"anticommutative", false},
                                   {"jacobi", false},
                                   {"flexible", false},
                                   {"aflexible", false},
                                   {"symmetric_anti_leibniz", false},
                                   {"symmetric_leibniz", false},
                                   {"alr", false}});
    e.claimed_nilpotent = false;
    e.claimed_dim_derived = 3;
    e.claimed_dim_ann = 0;
    out.push_back(std::move(e));
  }

  {
    Entry e;
    e.key = "A4_1";
    Algebra a(4, e.key);
    add(a, 1, 2, 3, 1);
    add(a, 1, 3, 4, 1);
    add(a, 2, 1, 3, -1);
    add(a, 3, 1, 4, -1);
    e.algebra = a;
    e.claimed_flags = with_common({{"commutative", false},
                                   {"anticommutative", true},
                                   {"jacobi", true},
                                   {"flexible", true},
                                   {"aflexible", true},
                                   {"symmetric_anti_leibniz", false},
                                   {"symmetric_leibniz", true},
                                   {"alr", false}});
    e.claimed_nilpotent = true;
    e.claimed_class = 3;
    e.claimed_dim_derived = 2;
    e.claimed_dim_ann = 1;
    out.push_back(std::move(e));
  }

  Flags three_step = with_common({{"commutative", false},
                                  {"anticommutative", false},
                                  {"flexible", true},
                                  {"aflexible", true},
                                  {"symmetric_anti_leibniz", false},
                                  {"symmetric_leibniz", true},
                                  {"alr", false}});

  {
    Entry e;
    e.key = "A4_2";
    Algebra a(4, e.key);
    add(a, 1, 2, 3, -1);
    add(a, 1, 2, 4, 1);
    add(a, 1, 3, 4, -1);
    add(a, 2, 1, 3, 1);
    add(a, 3, 1, 4, 1);
    e.algebra = a;
    e.claimed_flags = three_step;
    e.claimed_nilpotent = true;
    e.claimed_class = 3;
    e.claimed_dim_derived = 2;
    e.claimed_dim_ann = 1;
    out.push_back(std::move(e));
  }

  {
    Entry e;
    e.key = "A4_3";
    Algebra a(4, e.key);
    add(a, 1, 2, 3, -1);
    add(a, 1, 3, 4, -1);
    add(a, 2, 1, 3, 1);
    add(a, 2, 2, 4, 1);
    add(a, 3, 1, 4, 1);
    e.algebra = a;
    e.claimed_flags = three_step;
    e.claimed_nilpotent = true;
    e.claimed_class = 3;
    e.claimed_dim_derived = 2;
    e.claimed_dim_ann = 1;
    out.push_back(std::move(e));
  }

  {
    Entry e;
    e.key = "A4_4";
    Algebra a(4, e.key);
    add(a, 1, 1, 4, 1);
    add(a, 1, 2, 3, -1);
    add(a, 1, 3, 4, -1);
    add(a, 2, 1, 3, 1);
    add(a, 2, 2, 4, 1);
    add(a, 3, 1, 4, 1);
    e.algebra = a;
    e.claimed_flags = three_step;
    e.claimed_nilpotent = true;
    e.claimed_class = 3;
    e.claimed_dim_derived = 2;
    e.claimed_dim_ann = 1;
    out.push_back(std::move(e));
  }

  {
    Entry e;
    e.key = "A4_5";
    Algebra a(4, e.key);
    add(a, 1, 1, 4, 1);
    add(a, 1, 2, 3, -1);
    add(a, 1, 3, 4, -1);
    add(a, 2, 1, 3, 1);
    add(a, 3, 1, 4, 1);
    e.algebra = a;
    e.claimed_flags = three_step;
    e.claimed_nilpotent = true;
    e.claimed_class = 3;
    e.claimed_dim_derived = 2;
    e.claimed_dim_ann = 1;
    out.push_back(std::move(e));
  }

  {
    Entry e;
    e.key = "A5_0";
    Algebra a(5, e.key);
    add(a, 1, 2, 3, 1);
    add(a, 2, 1, 3, -1);
    add(a, 2, 3, 4, 1);
    add(a, 3, 2, 4, -1);
    add(a, 3, 4, 5, 1);
    add(a, 4, 3, 5, -1);
    e.algebra = a;
    e.claimed_flags = with_common({{"commutative", false},
                                   {"anticommutative", true},
                                   {"jacobi", false},
                                   {"flexible", true},
                                   {"aflexible", true},
                                   {"symmetric_anti_leibniz", false},
                                   {"symmetric_leibniz", false},
                                   {"alr", false}});
    e.claimed_nilpotent = true;
    e.claimed_class = 5;
    e.claimed_dim_derived = 3;
    e.claimed_dim_ann = 1;
    out.push_back(std::move(e));
  }

  return out;
}

std::string size_str(std::size_t v) {
  std::ostringstream os;
  os << v;
  return os.str();
}

void push_check(Report& r, const std::string& entry, const std::string& what,
                bool ok, const std::string& detail = "") {
  r.checks.push_back({entry, what, ok, detail});
  if (!ok) r.ok = false;
}

}  // namespace

const std::vector<Entry>& entries() {
  static const std::vector<Entry> table = build_entries();
  return table;
}

bool has_key(const std::string& key) {
  for (const auto& e : entries()) {
    if (e.key == key) return true;
  }
  return false;
}

Algebra get(const std::string& key) {
  for (const auto& e : entries()) {
    if (e.key == key) return e.algebra;
  }
  if (key == "A3_3") {
    throw InputError(
        "catalog: A3_3 is a parameterized family; pass a nonzero rational "
        "parameter");
  }
  throw InputError("catalog: unknown key '" + key + "'");
}

Algebra get(const std::string& key, const Rat& param) {
  if (key != "A3_3") {
    throw InputError("catalog: key '" + key + "' does not take a parameter");
  }
  return make_a3_3(param, "A3_3(" + param.str() + ")");
}

bool check_iso_witness(const Algebra& a, const Algebra& b, const QMatrix& p) {
  if (a.dim != b.dim) {
    throw InputError("check_iso_witness: algebras have different dimensions");
  }
  if (p.rows() != a.dim || p.cols() != a.dim) {
    throw InputError("check_iso_witness: matrix shape does not match");
  }
  if (!p.inverse().has_value()) {
    throw InputError("check_iso_witness: basis-change matrix is singular");
  }
  Algebra moved = basis_change(a, p);
  return moved.c == b.c;
}

Report verify_all() {
  Report r;

  for (const auto& e : entries()) {
    IdentityReport rep = classify(e.algebra);
    std::map<std::string, bool> have;
    for (const auto& [name, holds] : rep.flags) have[name] = holds;
    for (const auto& [name, want] : e.claimed_flags) {
      auto it = have.find(name);
      if (it == have.end()) {
        push_check(r, e.key, "flag " + name, false, "not in registry");
        continue;
      }
      push_check(r, e.key, "flag " + name, it->second == want,
                 it->second == want
                     ? ""
                     : "claimed " + std::string(want ? "true" : "false") +
                           ", computed " +
                           std::string(it->second ? "true" : "false"));
    }

    NilpotencyInfo nil = nilpotency(e.algebra);
    if (e.claimed_nilpotent) {
      bool ok = nil.nilpotent && nil.cls == e.claimed_class;
      push_check(r, e.key, "nilpotent of class " + size_str(e.claimed_class),
                 ok,
                 ok ? ""
                    : (nil.nilpotent
                           ? "computed class " + size_str(nil.cls)
                           : "computed non-nilpotent"));
    } else {
      push_check(r, e.key, "not nilpotent", !nil.nilpotent,
                 nil.nilpotent ? "computed nilpotent" : "");
    }

    std::size_t dd = derived_subalgebra(e.algebra).dim();
    push_check(r, e.key, "dim of derived subalgebra", dd == e.claimed_dim_derived,
               dd == e.claimed_dim_derived
                   ? ""
                   : "claimed " + size_str(e.claimed_dim_derived) +
                         ", computed " + size_str(dd));
    std::size_t da = annihilator(e.algebra).dim();
    push_check(r, e.key, "dim of annihilator", da == e.claimed_dim_ann,
               da == e.claimed_dim_ann
                   ? ""
                   : "claimed " + size_str(e.claimed_dim_ann) + ", computed " +
                         size_str(da));

    for (const auto& w : e.witnesses) {
      bool ok = false;
      std::string detail;
      try {
        ok = check_iso_witness(e.algebra, get(w.target_key), w.p);
        if (!ok) detail = "basis change does not map onto the target table";
      } catch (const InputError& ex) {
        detail = ex.what();
      }
      push_check(r, e.key, "isomorphism witness onto " + w.target_key, ok,
                 detail);
    }
  }

  // The parameterized family must have parameter-independent flags on a
  // sample of parameter values.
  {
    std::vector<Rat> samples = {Rat(1), Rat(-1), Rat(2), Rat(5, 7)};
    IdentityReport first = classify(get("A3_3", samples[0]));
    bool ok = true;
    std::string detail;
    for (std::size_t i = 1; i < samples.size(); ++i) {
      IdentityReport rep = classify(get("A3_3", samples[i]));
      if (rep.flags != first.flags) {
        ok = false;
        detail = "flags at parameter " + samples[i].str() +
                 " differ from parameter " + samples[0].str();
        break;
      }
    }
    push_check(r, "A3_3", "identity flags independent of the parameter", ok,
               detail);
  }

  // Within each dimension the fingerprints must separate the entries,
  // except for pairs declared isomorphic by an explicit witness.
  {
    std::set<std::pair<std::string, std::string>> declared;
    for (const auto& e : entries()) {
      for (const auto& w : e.witnesses) {
        declared.insert({e.key, w.target_key});
        declared.insert({w.target_key, e.key});
      }
    }
    std::vector<std::pair<std::string, Fingerprint>> fps;
    for (const auto& e : entries()) {
      fps.push_back({e.key, fingerprint(e.algebra)});
    }
    for (std::size_t i = 0; i < fps.size(); ++i) {
      for (std::size_t j = i + 1; j < fps.size(); ++j) {
        if (fps[i].second.dim != fps[j].second.dim) continue;
        bool same = fps[i].second == fps[j].second;
        bool is_declared = declared.count({fps[i].first, fps[j].first}) > 0;
        if (is_declared) {
          push_check(r, fps[i].first + " vs " + fps[j].first,
                     "declared isomorphic pair has equal fingerprints", same,
                     same ? "" : "fingerprints differ");
        } else {
          push_check(r, fps[i].first + " vs " + fps[j].first,
                     "fingerprints distinct", !same,
                     same ? "fingerprints coincide" : "");
        }
      }
    }
  }

  r.notes.push_back(
      "This check verifies the stored tables against their recorded "
      "properties and distinguishes the entries pairwise; it does not "
      "attempt an enumeration of all algebras of a given dimension, so it "
      "is not a completeness proof for the lists.");
  return r;
}

}  // namespace abdkit::catalog
