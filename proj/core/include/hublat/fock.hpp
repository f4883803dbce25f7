#pragma once

#include <array>
#include <cstdint>
#include <initializer_list>
#include <unordered_map>
#include <vector>

#include "hublat/lattice.hpp"

namespace hublat {

enum class Statistics { boson, fermion };
enum class Spin { up, down };

/// One occupation configuration with at most three particles, stored as
/// sorted particle positions. Fermions keep separate position lists per
/// spin; modes are ordered site-major with up before down, and basis
/// states are the mode creation operators applied in ascending mode
/// order to the vacuum (this fixes all fermionic signs).
struct FockState {
  std::array<int, 3> boson{{-1, -1, -1}};
  std::array<int, 3> up{{-1, -1, -1}};
  std::array<int, 3> down{{-1, -1, -1}};
  int n_boson = 0;
  int n_up = 0;
  int n_down = 0;

  static FockState bosons(std::initializer_list<int> sites);
  static FockState fermions(std::initializer_list<int> up_sites,
                            std::initializer_list<int> down_sites);

  /// Bosonic occupation of `site`.
  int occ(int site) const;
  /// Fermionic occupation of (site, spin), 0 or 1.
  int occ(int site, Spin s) const;
  /// Total occupation of `site` regardless of statistics.
  int total_occ(int site) const;

  bool operator==(const FockState&) const = default;
};

struct ParticleContent {
  Statistics statistics = Statistics::boson;
  int n_bosons = 0;
  int n_up = 0;
  int n_down = 0;

  static ParticleContent bosons(int n) { return {Statistics::boson, n, 0, 0}; }
  static ParticleContent fermions(int n_up, int n_down) {
    return {Statistics::fermion, 0, n_up, n_down};
  }
  int total() const {
    return statistics == Statistics::boson ? n_bosons : n_up + n_down;
  }
};

/// Complete enumeration of a fixed-particle-number sector. States are
/// ordered lexicographically by occupation vector (fermions: by the
/// site-major up-before-down mode occupation vector), ascending, which
/// makes the ordering deterministic across runs.
class FockBasis {
 public:
  FockBasis(const LatticeSpec& lattice, ParticleContent content);

  int dimension() const { return static_cast<int>(states_.size()); }
  int n_sites() const { return n_sites_; }
  Statistics statistics() const { return content_.statistics; }
  const ParticleContent& content() const { return content_; }
  const FockState& state(int i) const { return states_[i]; }

  /// Index of a state; throws std::out_of_range if not in the basis.
  int index(const FockState& s) const;
  /// Index of a state, or -1 if not in the basis.
  int find(const FockState& s) const;

 private:
  int n_sites_ = 0;
  ParticleContent content_;
  std::vector<FockState> states_;
  std::unordered_map<std::uint64_t, int> index_;

  std::uint64_t key(const FockState& s) const;
};

}  // namespace hublat
