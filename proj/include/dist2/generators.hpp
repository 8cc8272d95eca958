#pragma once

#include <string>

#include "dist2/graph.hpp"
#include "dist2/rational.hpp"

namespace dist2 {

// The three Moore graphs of diameter 2: their squares are complete, so the
// 2-distance chromatic number equals the vertex count.
Graph moore_2_2();  // 5-cycle
Graph moore_3_2();  // Petersen
Graph moore_7_2();  // Hoffman-Singleton

// Extremal girth-3 / girth-4 constructions on vertices x, y, z plus three
// groups of about delta/2 two-vertices; delta must be even and >= 8.  The
// girth-3 variant adds the direct x-y edge and reaches floor(3*delta/2)+1
// two-distance colors; without it the girth is 4 and one color is saved on
// each of x, y (floor(3*delta/2)-1).
Graph wegner_girth3(int delta);
Graph wegner_girth4(int delta);

// Seeded sparse instance: a degree-capped random tree with one vertex forced
// to degree delta_target, then bounded random edge augmentation where every
// accepted edge keeps mad_exact below mad_cap.  Reproducible per seed.
// Throws std::invalid_argument on impossible parameters and GraphError when
// even the base tree violates mad_cap.
Graph random_sparse(int n, const Rational& mad_cap, int delta_target,
                    unsigned long long seed);

enum class GeneratorKind {
  moore_2_2,
  moore_3_2,
  moore_7_2,
  wegner_girth3,
  wegner_girth4,
  random_sparse,
};

struct GeneratorSpec {
  GeneratorKind kind = GeneratorKind::moore_2_2;
  int delta = 0;  // wegner kinds
  int n = 0;      // random_sparse
  Rational mad_cap;
  int delta_target = 0;
  unsigned long long seed = 0;
};

GeneratorKind generator_kind_by_name(const std::string& name);
const char* generator_kind_name(GeneratorKind kind);

Graph generate(const GeneratorSpec& spec);

}  // namespace dist2
