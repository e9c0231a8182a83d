#pragma once

// Machine-readable renderings shared by the CLI and the Python module.
//
// Integers above 2^53 - 1 are emitted as decimal strings so JSON consumers
// that parse numbers as doubles stay exact.

#include <string>

#include <json.hpp>

#include "gzono/bigint.hpp"
#include "gzono/flip.hpp"
#include "gzono/graph.hpp"
#include "gzono/orientation.hpp"

namespace gzono {

nlohmann::json to_json(const BigInt& v);
BigInt bigint_from_json(const nlohmann::json& j);

/// [f0, f1, ..., fd]
nlohmann::json to_json(const FaceVector& f);
FaceVector face_vector_from_json(const nlohmann::json& j);

/// Header "f0,f1,...,fd" and one data row, LF-terminated.
std::string face_vector_csv(const FaceVector& f);

/// {"n": n, "m": m, "edges": [[i, j], ...]} with 1-based labels.
nlohmann::json to_json(const Graph& g);

/// [v1, v2, v3, v4], 1-based.
nlohmann::json quad_tuple(const FlipQuad& q);

/// {"quad": [...], "sides": {"1": [...], ..., "4": [...]}}
nlohmann::json to_json(const FlipQuad& q);

/// List of quad tuples.
nlohmann::json to_json(const FlipPath& p);

/// Face-vector table for n = 2..max_n: rows n, columns i, then Total.
std::string ngon_table_text(int max_n);
std::string ngon_table_csv(int max_n);

}  // namespace gzono
