#pragma once

// Exact linear algebra on homogeneous sectors of the free coloured algebra.
//
// A sector is the span of all words with a fixed multidegree. Spans and
// two-sided ideal membership restricted to a sector are finite-dimensional
// questions, decided by fraction-free elimination over the polynomial ring
// (equivalently over its field of fractions). Symbolic ranks are re-checked
// at random rational parameter points.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "json.hpp"
#include "jordanian/nc_poly.hpp"

namespace jordanian {

struct EngineOptions {
  std::size_t max_sector_dim = 4096;
  // Letters of different copies commute; sectors then only hold words whose
  // copy indices are non-decreasing.
  bool commuting_copies = false;
  int guard_points = 3;
  std::uint64_t seed = 20240611;
};

class Sector {
 public:
  // Throws SectorTooLarge before enumerating when the dimension exceeds the cap.
  Sector(Multidegree degree, bool commuting_copies, std::size_t max_dim = 4096);
  // Sector of a nonzero homogeneous element; throws InhomogeneousInput otherwise.
  static Sector of(const NCPoly& p, const EngineOptions& options = {});

  // Dimension without enumerating the basis.
  static std::size_t dimension_of(const Multidegree& degree, bool commuting_copies);

  const Multidegree& degree() const noexcept { return degree_; }
  bool commuting_copies() const noexcept { return commuting_; }
  std::size_t length() const noexcept { return length_; }
  // Words in lexicographic order.
  const std::vector<NCWord>& basis() const noexcept { return basis_; }
  std::size_t dimension() const noexcept { return basis_.size(); }
  std::optional<std::size_t> index(const NCWord& w) const;
  bool contains(const NCPoly& p) const;

 private:
  Multidegree degree_;
  bool commuting_;
  std::size_t length_ = 0;
  std::vector<NCWord> basis_;
};

// Outcome of a symbolic rank computation re-checked at random points.
struct RankGuard {
  bool ok = true;
  std::string detail;
};

enum class SpanRelation { equal, first_in_second, second_in_first, incomparable };

std::string to_string(SpanRelation r);

struct SpanComparison {
  SpanRelation relation = SpanRelation::equal;
  std::size_t rank_first = 0;
  std::size_t rank_second = 0;
  std::size_t rank_union = 0;
  std::size_t dimension = 0;
  RankGuard guard;
};

// Ranks of the two linear spans inside one sector.
SpanComparison span_compare(std::span<const NCPoly> first, std::span<const NCPoly> second, const Sector& sector,
                            const EngineOptions& options = {});
// Sector taken from the first nonzero element.
SpanComparison span_compare(std::span<const NCPoly> first, std::span<const NCPoly> second,
                            const EngineOptions& options = {});

std::size_t span_rank(std::span<const NCPoly> elements, const Sector& sector, const EngineOptions& options = {});

struct CertificateTerm {
  NCWord left;
  std::size_t relation = 0;
  NCWord right;
  Scalar coeff;
};

// target = sum of coeff * left * relation * right.
struct Certificate {
  NCPoly target;
  std::vector<CertificateTerm> combination;
};

NCPoly expand(const Certificate& c, std::span<const NCPoly> relations, bool commuting_copies = false);
bool verify_certificate(const Certificate& c, std::span<const NCPoly> relations, bool commuting_copies = false);

// { "target": ..., "combination": [ { "left", "relation", "right", "coeff" } ] }
nlohmann::json to_json(const Certificate& c);

struct Membership {
  bool member = false;
  std::optional<Certificate> certificate;
  bool certificate_verified = false;
  // Normal form of the target modulo the sector part of the ideal, supported
  // on non-pivot words; zero iff member.
  NCPoly residual;
  std::size_t dimension = 0;
  std::size_t generators = 0;
  std::size_t relation_rank = 0;
  RankGuard guard;
};

// Decides whether p lies in the two-sided ideal generated by the relations,
// restricted to the sector of p: the span of u*r*v over words u, v with
// |u| + |r| + |v| = |p|. Relations must be homogeneous. degree_bound must be
// at least the length of p.
Membership ideal_membership(const NCPoly& p, const RelationSet& relations, std::size_t degree_bound,
                            const EngineOptions& options = {});

}  // namespace jordanian
