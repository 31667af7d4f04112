// Command-line front end: classification reports, derivation-type spaces,
// operad queries, extension constructions, and the built-in catalog.
#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "abdkit/algebra.hpp"
#include "abdkit/catalog.hpp"
#include "abdkit/constructions.hpp"
#include "abdkit/errors.hpp"
#include "abdkit/identities.hpp"
#include "abdkit/json_io.hpp"
#include "abdkit/map_spaces.hpp"
#include "abdkit/operad.hpp"
#include "abdkit/rng.hpp"

namespace {

using namespace abdkit;

struct Options {
  bool json = false;
  bool has_seed = false;
  std::uint64_t seed_value = 0;
  int exit_code = 0;

  std::uint64_t seed() const { return resolve_seed(has_seed, seed_value); }
};

void emit(const Options& opt, const ojson& j,
          const std::vector<std::string>& text) {
  if (opt.json) {
    std::cout << j.dump(2) << "\n";
  } else {
    for (const auto& line : text) std::cout << line << "\n";
  }
}

struct LoadedAlgebra {
  Algebra a;
  std::string digest;
};

LoadedAlgebra load_algebra(const std::string& path) {
  std::string bytes = read_file_bytes(path);
  Algebra a = algebra_from_json(parse_json_text(bytes));
  validate(a);
  return {a, fnv1a_hex(bytes)};
}

std::string yn(bool b) { return b ? "yes" : "no"; }

std::string tuple_str(const std::vector<std::size_t>& w) {
  std::string s = "(";
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) s += ", ";
    s += "e" + std::to_string(w[i]);
  }
  return s + ")";
}

std::string vec_pretty(const QVec& v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ", ";
    s += v[i].str();
  }
  return s + "]";
}

// ---------------------------------------------------------------- classify

void cmd_classify(const Options& opt, const std::string& path) {
  LoadedAlgebra in = load_algebra(path);
  IdentityReport rep = classify(in.a);
  Fingerprint fp = fingerprint(in.a);
  NilpotencyInfo nil = nilpotency(in.a);

  ojson j;
  j["command"] = "classify";
  j["input"] = path;
  j["input_digest"] = in.digest;
  j["label"] = in.a.label;
  j["dim"] = in.a.dim;
  j["registry_version"] = rep.registry_version;
  j["is_abd"] = rep.is_abd;
  ojson flags;
  for (const auto& [name, holds] : rep.flags) flags[name] = holds;
  j["flags"] = flags;
  ojson wit;
  for (const auto& [name, w] : rep.witnesses) {
    ojson arr = ojson::array();
    for (std::size_t v : w) arr.push_back(v);
    wit[name] = arr;
  }
  j["witnesses"] = wit;
  ojson dims;
  dims["derived"] = fp.dim_derived;
  dims["annihilator"] = fp.dim_ann;
  dims["derivations"] = fp.dim_der;
  dims["antiderivations"] = fp.dim_ader;
  dims["derived_plus"] = fp.dim_derived_plus;
  dims["annihilator_plus"] = fp.dim_ann_plus;
  dims["derived_minus"] = fp.dim_derived_minus;
  dims["annihilator_minus"] = fp.dim_ann_minus;
  j["dims"] = dims;
  j["nilpotent"] = nil.nilpotent;
  if (nil.nilpotent) j["nilpotency_class"] = nil.cls;
  ojson chain = ojson::array();
  for (std::size_t d : nil.chain_dims) chain.push_back(d);
  j["power_chain"] = chain;

  std::vector<std::string> text;
  text.push_back("algebra: " + (in.a.label.empty() ? "(unnamed)" : in.a.label) +
                 "  (dim " + std::to_string(in.a.dim) + ")");
  text.push_back("input: " + path + "  digest " + in.digest);
  text.push_back("registry: " + rep.registry_version);
  text.push_back("is_abd: " + yn(rep.is_abd));
  std::string nils = "nilpotent: " + yn(nil.nilpotent);
  if (nil.nilpotent) nils += " (class " + std::to_string(nil.cls) + ")";
  text.push_back(nils);
  text.push_back(
      "derived: " + std::to_string(fp.dim_derived) +
      "  annihilator: " + std::to_string(fp.dim_ann) +
      "  derivations: " + std::to_string(fp.dim_der) +
      "  antiderivations: " + std::to_string(fp.dim_ader));
  text.push_back("flags:");
  for (const auto& [name, holds] : rep.flags) {
    std::string line = "  " + name + ": " + (holds ? "pass" : "fail");
    auto it = rep.witnesses.find(name);
    if (!holds && it != rep.witnesses.end()) {
      line += " at " + tuple_str(it->second);
    }
    text.push_back(line);
  }
  emit(opt, j, text);
}

// ------------------------------------------------------------------ spaces

void cmd_spaces(const Options& opt, const std::string& path,
                const std::string& which, const std::string& member_path,
                bool show_table) {
  LoadedAlgebra in = load_algebra(path);

  ojson j;
  j["command"] = "spaces";
  j["which"] = which;
  j["input"] = path;
  j["input_digest"] = in.digest;
  j["label"] = in.a.label;
  j["dim"] = in.a.dim;

  std::vector<std::string> text;
  text.push_back("space: " + which + " of " +
                 (in.a.label.empty() ? "(unnamed)" : in.a.label) + "  (dim " +
                 std::to_string(in.a.dim) + ")");

  if (which == "der" || which == "ader") {
    MapSpace s = (which == "der") ? derivation_space(in.a)
                                  : antiderivation_space(in.a);
    j["space_dim"] = s.dim();
    ojson basis = ojson::array();
    for (const QMatrix& m : s.basis) basis.push_back(qmatrix_to_json(m));
    j["basis"] = basis;
    text.push_back("dimension: " + std::to_string(s.dim()));
    if (show_table) {
      for (std::size_t b = 0; b < s.basis.size(); ++b) {
        text.push_back("basis matrix " + std::to_string(b) + ":");
        for (std::size_t r = 0; r < s.basis[b].rows(); ++r) {
          std::string line = "  ";
          for (std::size_t c = 0; c < s.basis[b].cols(); ++c) {
            if (c) line += "  ";
            line += s.basis[b].at(r, c).str();
          }
          text.push_back(line);
        }
      }
    }
    if (which == "der") {
      InvertibleDerivationResult inv =
          has_invertible_derivation(in.a, opt.seed());
      std::string verdict =
          inv.verdict == InvertibleDerivationResult::Verdict::yes
              ? "yes"
              : (inv.verdict ==
                         InvertibleDerivationResult::Verdict::no_certificate
                     ? "no_certificate"
                     : "unknown_probably_no");
      j["invertible_derivation"] = verdict;
      j["invertible_reason"] = inv.reason;
      if (inv.verdict == InvertibleDerivationResult::Verdict::yes) {
        j["invertible_witness"] = qmatrix_to_json(inv.witness);
      }
      text.push_back("invertible derivation: " + verdict +
                     (inv.reason.empty() ? "" : " (" + inv.reason + ")"));
    }
    if (!member_path.empty()) {
      throw InputError(
          "--member applies only to the bilinear spaces (antibider, bider)");
    }
  } else {
    BilinearMapSpace s = (which == "antibider")
                             ? skew_anti_biderivation_space(in.a)
                             : skew_biderivation_space(in.a);
    j["space_dim"] = s.dim();
    ojson basis = ojson::array();
    for (const auto& t : s.tables) {
      basis.push_back(triples_from_flat(t, in.a.dim, in.a.dim, in.a.dim));
    }
    j["basis"] = basis;
    text.push_back("dimension: " + std::to_string(s.dim()));
    if (show_table) {
      for (std::size_t b = 0; b < s.tables.size(); ++b) {
        text.push_back("basis table " + std::to_string(b) + ": " +
                       triples_from_flat(s.tables[b], in.a.dim, in.a.dim,
                                         in.a.dim)
                           .dump());
      }
    }
    if (!member_path.empty()) {
      LoadedAlgebra mem = load_algebra(member_path);
      if (mem.a.dim != in.a.dim) {
        throw InputError("--member algebra has a different dimension");
      }
      bool contained = s.contains_table(mem.a.c);
      j["member"] = member_path;
      j["member_contained"] = contained;
      text.push_back("member table contained: " + yn(contained));
    }
  }
  emit(opt, j, text);
}

// ------------------------------------------------------------------ operad

RelationSet parse_variety(const std::string& spec) {
  if (spec == "zero" || spec == "free") {
    return RelationSet{3, Subspace::zero(monomial_basis(3).dim())};
  }
  // Try registry names joined by '+'; otherwise treat as a file path.
  std::vector<std::string> parts;
  std::string cur;
  for (char ch : spec) {
    if (ch == '+') {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  parts.push_back(cur);
  auto resolve = [](const std::string& name) -> std::string {
    if (name == "al") return "al_bracket";
    if (name == "ar") return "ar_bracket";
    return name;
  };
  bool all_registry = true;
  for (const auto& p : parts) {
    if (!registry_has(resolve(p))) {
      all_registry = false;
      break;
    }
  }
  std::vector<Identity> ids;
  if (all_registry) {
    for (const auto& p : parts) {
      const NamedCheck& nc = registry_entry(resolve(p));
      for (const Identity& id : nc.identities) ids.push_back(id);
    }
  } else {
    ojson j = load_json_file(spec);
    if (j.is_array()) {
      for (const ojson& item : j) ids.push_back(identity_from_json(item));
    } else {
      ids.push_back(identity_from_json(j));
    }
  }
  return identity_span(ids, 3);
}

void cmd_operad(const Options& opt, const std::string& variety,
                const std::string& action, const std::string& other) {
  RelationSet r = parse_variety(variety);

  ojson j;
  j["command"] = "operad";
  j["variety"] = variety;
  j["action"] = action;
  j["relation_dim"] = r.span.dim();

  std::vector<std::string> text;
  text.push_back("variety: " + variety + "  (relation span dim " +
                 std::to_string(r.span.dim()) + ")");

  if (action == "dual") {
    DualResult d = koszul_dual(r);
    j["dual_dim"] = d.dual_span.span.dim();
    ojson gens = ojson::array();
    for (const auto& g : d.generator_identities) gens.push_back(g);
    j["dual_generators"] = gens;
    j["selfdual"] = (d.dual_span.span == r.span);
    text.push_back("dual relation span dim: " +
                   std::to_string(d.dual_span.span.dim()));
    text.push_back("dual generators:");
    for (const auto& g : d.generator_identities) text.push_back("  " + g);
    text.push_back("self-dual: " + yn(d.dual_span.span == r.span));
  } else if (action == "selfdual") {
    DualResult d = koszul_dual(r);
    bool sd = (d.dual_span.span == r.span);
    j["selfdual"] = sd;
    text.push_back("self-dual: " + yn(sd));
  } else if (action == "dong") {
    bool dong = dong_check(r);
    j["dong"] = dong;
    text.push_back("dong property: " + yn(dong));
  } else {  // include
    RelationSet o = parse_variety(other);
    bool inc = variety_includes(r, o);
    j["other"] = other;
    j["includes"] = inc;
    text.push_back("every " + variety + "-algebra satisfies " + other + ": " +
                   yn(inc));
  }
  emit(opt, j, text);
}

// --------------------------------------------------------------- construct

void cmd_construct(const Options& opt, const std::string& kind,
                   const std::string& path) {
  std::string bytes = read_file_bytes(path);
  ojson input = parse_json_text(bytes);

  ojson j;
  j["command"] = "construct";
  j["kind"] = kind;
  j["input"] = path;
  j["input_digest"] = fnv1a_hex(bytes);

  std::vector<std::string> text;

  if (kind == "central") {
    CocycleData d = cocycle_from_json(input);
    Algebra out = central_extension(d);
    j["output"] = algebra_to_json(out);
    j["output_jj"] = check_named(out, "jj").holds;
    text.push_back("central extension: dim " + std::to_string(out.dim));
    text.push_back("output satisfies jj: " +
                   yn(check_named(out, "jj").holds));
    text.push_back(algebra_to_json(out).dump());
  } else if (kind == "abd_ext") {
    ExtensionData x = extension_from_json(input);
    Algebra out = abd_extension(x);
    IdentityReport rep = classify(out);
    j["output"] = algebra_to_json(out);
    j["output_abd"] = rep.is_abd;
    j["output_antiassociative"] = check_named(out, "antiassociative").holds;
    text.push_back("extension algebra: dim " + std::to_string(out.dim));
    text.push_back("output satisfies abd: " + yn(rep.is_abd));
    text.push_back(algebra_to_json(out).dump());
  } else if (kind == "pjj" || kind == "abd_struct") {
    Algebra a = algebra_from_json(input);
    validate(a);
    PointwiseProduct p = (kind == "pjj")
                             ? build_pjj(a, opt.seed())
                             : build_abd_structure(a, opt.seed());
    GridCheck gc = verify_pjj_axioms(a, p, opt.seed());
    bool nonzero = false;
    for (std::size_t i = 0; i < p.dim && !nonzero; ++i) {
      for (std::size_t k = 0; k < p.dim && !nonzero; ++k) {
        QVec x(p.dim, Rat(0)), y(p.dim, Rat(0));
        x[i] = Rat(1);
        y[k] = Rat(1);
        if (!qvec_is_zero(pp_eval(p, x, y))) nonzero = true;
      }
    }
    j["target_vector"] = qvec_to_json(p.c);
    j["functional"] = qvec_to_json(p.f);
    j["generator"] = qvec_to_json(p.generator);
    j["ideal_dim"] = p.ideal.dim();
    j["axioms"] = {{"first", gc.eq1},
                   {"second", gc.eq1dot},
                   {"third", gc.eq1ddot}};
    j["is_pjj"] = p.is_pjj;
    j["nonzero_on_basis"] = nonzero;
    if (!p.axiom_note.empty()) j["note"] = p.axiom_note;
    j["bilinearity"] =
        "the star map x,y -> f(x)f(y)(f(y)-f(x)) c is cubic in the "
        "coordinates, not bilinear; axioms are checked pointwise on a "
        "deterministic grid";
    text.push_back("target vector: " + vec_pretty(p.c));
    text.push_back("functional: " + vec_pretty(p.f));
    text.push_back("generator: " + vec_pretty(p.generator));
    text.push_back("ideal dimension: " + std::to_string(p.ideal.dim()));
    text.push_back("axioms on grid: first " + yn(gc.eq1) + ", second " +
                   yn(gc.eq1dot) + ", third " + yn(gc.eq1ddot));
    text.push_back("nonzero on basis pairs: " + yn(nonzero));
    text.push_back("is_pjj: " + yn(p.is_pjj));
    if (!p.axiom_note.empty()) text.push_back("note: " + p.axiom_note);
    text.push_back(
        "note: the star map is cubic in the coordinates, not bilinear; "
        "axioms are checked pointwise on a deterministic grid");
  } else {  // decompose
    Algebra a = algebra_from_json(input);
    validate(a);
    QMatrix split(0, 0);
    ExtensionData x = decompose_aflexible(a, &split);
    Algebra rebuilt = abd_extension(x);
    Algebra moved = basis_change(a, split);
    bool roundtrip = (rebuilt.c == moved.c);
    if (!roundtrip) {
      throw InternalError(
          "decomposition does not reassemble to the basis-changed input");
    }
    j["extension"] = extension_to_json(x);
    j["splitting"] = qmatrix_to_json(split);
    j["round_trip"] = "exact";
    text.push_back("base dim: " + std::to_string(x.cocycle.base.dim) +
                   ", fiber dim: " + std::to_string(x.cocycle.fiber_dim));
    text.push_back("round-trip: OK (reassembled product table matches)");
    text.push_back(extension_to_json(x).dump());
  }
  emit(opt, j, text);
}

// ----------------------------------------------------------------- catalog

void catalog_list(const Options& opt) {
  ojson j = ojson::array();
  std::vector<std::string> text;
  for (const auto& e : catalog::entries()) {
    ojson item;
    item["key"] = e.key;
    item["dim"] = e.algebra.dim;
    j.push_back(item);
    text.push_back(e.key + "  (dim " + std::to_string(e.algebra.dim) + ")");
  }
  emit(opt, j, text);
}

void catalog_verify(Options& opt) {
  catalog::Report r = catalog::verify_all();
  ojson j;
  j["command"] = "catalog verify";
  j["ok"] = r.ok;
  std::size_t failures = 0;
  ojson checks = ojson::array();
  for (const auto& c : r.checks) {
    if (!c.ok) ++failures;
    ojson item;
    item["entry"] = c.entry;
    item["what"] = c.what;
    item["ok"] = c.ok;
    if (!c.detail.empty()) item["detail"] = c.detail;
    checks.push_back(item);
  }
  j["checks"] = checks;
  ojson notes = ojson::array();
  for (const auto& n : r.notes) notes.push_back(n);
  j["notes"] = notes;

  std::vector<std::string> text;
  text.push_back("catalog verification: " + std::to_string(r.checks.size()) +
                 " checks, " + std::to_string(failures) + " failures");
  for (const auto& c : r.checks) {
    if (!c.ok) {
      text.push_back("FAIL  " + c.entry + ": " + c.what +
                     (c.detail.empty() ? "" : " (" + c.detail + ")"));
    }
  }
  for (const auto& n : r.notes) text.push_back("note: " + n);
  text.push_back(r.ok ? "result: all claims verified"
                      : "result: verification FAILED");
  emit(opt, j, text);
  if (!r.ok) opt.exit_code = 1;
}

void catalog_get(const Options& opt, const std::string& key,
                 const std::string& param) {
  Algebra a;
  if (param.empty()) {
    a = catalog::get(key);
  } else {
    auto eq = param.find('=');
    std::string pname = (eq == std::string::npos) ? "" : param.substr(0, eq);
    if (pname != "a") {
      throw InputError("catalog get: --param expects the form a=p/q");
    }
    a = catalog::get(key, Rat::parse(param.substr(eq + 1)));
  }
  ojson j = algebra_to_json(a);
  std::vector<std::string> text;
  text.push_back(a.label + "  (dim " + std::to_string(a.dim) + ")");
  for (std::size_t i = 0; i < a.dim; ++i) {
    for (std::size_t k = 0; k < a.dim; ++k) {
      std::string rhs;
      for (std::size_t m = 0; m < a.dim; ++m) {
        const Rat& q = a.cat(i, k, m);
        if (q.is_zero()) continue;
        if (!rhs.empty()) rhs += " + ";
        rhs += (q.is_one() ? "" : "(" + q.str() + ") ") + ("e" + std::to_string(m));
      }
      if (!rhs.empty()) {
        text.push_back("e" + std::to_string(i) + " * e" + std::to_string(k) +
                       " = " + rhs);
      }
    }
  }
  // The JSON form is the exchange format; print it in both modes so the
  // output can be piped into the other subcommands.
  if (!opt.json) text.push_back(j.dump());
  emit(opt, j, text);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"abdkit: exact-arithmetic workbench for finite-dimensional "
               "nonassociative algebras"};
  app.require_subcommand(1);
  app.fallthrough();

  Options opt;
  app.add_flag("--json", opt.json, "machine-readable JSON output");
  auto* seed_opt = app.add_option("--seed", opt.seed_value,
                                  "seed for sampled checks (overrides "
                                  "ABDKIT_SEED)");

  std::string classify_path;
  auto* c_classify =
      app.add_subcommand("classify", "identity flags and dimensions");
  c_classify->fallthrough();
  c_classify->add_option("path", classify_path, "algebra JSON file")
      ->required();

  std::string spaces_path, spaces_which, member_path;
  bool show_table = false;
  auto* c_spaces = app.add_subcommand(
      "spaces", "derivation-type linear and bilinear map spaces");
  c_spaces->fallthrough();
  c_spaces->add_option("path", spaces_path, "algebra JSON file")->required();
  c_spaces
      ->add_option("which", spaces_which,
                   "one of: der, ader, antibider, bider")
      ->required()
      ->check(CLI::IsMember({"der", "ader", "antibider", "bider"}));
  c_spaces->add_option("--member", member_path,
                       "algebra JSON file whose product table is tested for "
                       "membership in the computed bilinear space");
  c_spaces->add_flag("--table", show_table, "print basis elements in text mode");

  std::string operad_variety, operad_action, operad_other;
  auto* c_operad = app.add_subcommand(
      "operad", "relation spans, Koszul duals, inclusion checks");
  c_operad->fallthrough();
  c_operad
      ->add_option("variety", operad_variety,
                   "registry names joined by '+', 'zero', or identity JSON "
                   "file")
      ->required();
  c_operad->add_option("action", operad_action, "dual, selfdual, dong, include")
      ->required()
      ->check(CLI::IsMember({"dual", "selfdual", "dong", "include"}));
  c_operad->add_option("other", operad_other,
                       "second variety (for 'include')");

  std::string construct_kind, construct_path;
  auto* c_construct = app.add_subcommand(
      "construct", "central extensions, depolarized extensions, "
                   "skew structures, decomposition");
  c_construct->fallthrough();
  c_construct
      ->add_option("kind", construct_kind,
                   "central, abd_ext, pjj, abd_struct, decompose")
      ->required()
      ->check(CLI::IsMember(
          {"central", "abd_ext", "pjj", "abd_struct", "decompose"}));
  c_construct->add_option("path", construct_path, "input JSON file")
      ->required();

  auto* c_catalog = app.add_subcommand("catalog", "built-in algebra catalog");
  c_catalog->fallthrough();
  c_catalog->require_subcommand(1);
  auto* c_list = c_catalog->add_subcommand("list", "list entry keys");
  c_list->fallthrough();
  auto* c_verify =
      c_catalog->add_subcommand("verify", "re-verify all recorded claims");
  c_verify->fallthrough();
  std::string get_key, get_param;
  auto* c_get = c_catalog->add_subcommand("get", "export one entry");
  c_get->fallthrough();
  c_get->add_option("key", get_key, "entry key, e.g. A4_0 or A3_3")
      ->required();
  c_get->add_option("--param", get_param, "family parameter, form a=p/q");

  try {
    app.parse(argc, argv);
    opt.has_seed = seed_opt->count() > 0;
    if (*c_classify) {
      cmd_classify(opt, classify_path);
    } else if (*c_spaces) {
      cmd_spaces(opt, spaces_path, spaces_which, member_path, show_table);
    } else if (*c_operad) {
      if ((operad_action == "include") != !operad_other.empty()) {
        throw InputError(
            "operad: 'include' takes a second variety; other actions do not");
      }
      cmd_operad(opt, operad_variety, operad_action, operad_other);
    } else if (*c_construct) {
      cmd_construct(opt, construct_kind, construct_path);
    } else if (*c_catalog) {
      if (*c_list) {
        catalog_list(opt);
      } else if (*c_verify) {
        catalog_verify(opt);
      } else {
        catalog_get(opt, get_key, get_param);
      }
    }
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  } catch (const InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const PreconditionError& e) {
    std::cerr << "precondition failure: " << e.what() << "\n";
    if (!e.witness().empty()) std::cerr << "witness: " << e.witness() << "\n";
    return 4;
  } catch (const InternalError& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  }
  return opt.exit_code;
}
