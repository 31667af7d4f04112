#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include <json.hpp>

#include "abdkit/algebra.hpp"
#include "abdkit/constructions.hpp"
#include "abdkit/identities.hpp"
#include "abdkit/matrix.hpp"

namespace abdkit {

// Ordered JSON keeps object keys in insertion order, which makes every
// rendering byte-stable for identical inputs.
using ojson = nlohmann::ordered_json;

// Throws InputError (with the underlying parser's position info) on bad text.
ojson parse_json_text(const std::string& text);
std::string read_file_bytes(const std::string& path);  // InputError if unreadable
ojson load_json_file(const std::string& path);

// {"dim": n, "label": str, "products": [[i, j, k, "p/q"], ...]}
// 0-based indices; omitted triples are zero; duplicate triples are rejected.
Algebra algebra_from_json(const ojson& j);
ojson algebra_to_json(const Algebra& a);

// {"arity": k, "terms": [{"coeff": "p/q", "tree": <nested pairs of leaf indices>}]}
Identity identity_from_json(const ojson& j);
ojson identity_to_json(const Identity& id);

// {"base": <Algebra>, "fiber_dim": m, "beta": [[i, j, k, "p/q"], ...]}
CocycleData cocycle_from_json(const ojson& j);
ojson cocycle_to_json(const CocycleData& d);

// Cocycle fields plus "bracket" with indices over the total space and values
// in fiber coordinates.
ExtensionData extension_from_json(const ojson& j);
ojson extension_to_json(const ExtensionData& d);

ojson qvec_to_json(const QVec& v);
ojson qmatrix_to_json(const QMatrix& m);

// Sparse triple list [[i, j, k, "p/q"], ...] for a flat (n1 x n2 x n3) table
// stored with index ((i*n2)+j)*n3+k; zero entries are omitted.
ojson triples_from_flat(const std::vector<Rat>& flat, std::size_t n1,
                        std::size_t n2, std::size_t n3);

// 64-bit FNV-1a digest of the given bytes, as 16 lowercase hex digits.
std::string fnv1a_hex(const std::string& bytes);

}  // namespace abdkit
