#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "femtonc/bitset.hpp"

namespace femtonc {

// Files, clients and FCs are identified by dense zero-based indices. A
// Scenario's clients[j].id == j and fcs[i].id == i always hold.
using FileId = int;
using ClientId = int;
using FcId = int;

struct Point {
  double x = 0.0;
  double y = 0.0;
  bool operator==(const Point&) const = default;
};

double distance(Point a, Point b);

// Set of files over a library of fixed size.
class FileSet {
public:
  FileSet() = default;
  explicit FileSet(int num_files) : bits_(static_cast<std::size_t>(num_files)) {}
  FileSet(int num_files, const std::vector<FileId>& files);

  int library_size() const { return static_cast<int>(bits_.size()); }
  bool contains(FileId f) const { return f >= 0 && f < library_size() && bits_.test(f); }
  void insert(FileId f) { bits_.set(f); }
  void erase(FileId f) { bits_.reset(f); }
  int size() const { return static_cast<int>(bits_.count()); }
  bool empty() const { return bits_.none(); }
  std::vector<FileId> to_vector() const;
  const DynamicBitset& bits() const { return bits_; }

  bool operator==(const FileSet&) const = default;

private:
  DynamicBitset bits_;
};

struct Client {
  ClientId id = 0;
  Point position;
  FileSet has;
  FileId wants = 0;
};

struct Femtocache {
  FcId id = 0;
  Point position;
  double radius = 0.0;
  FileSet cache;
};

struct Scenario {
  int num_files = 0;
  std::vector<Client> clients;
  std::vector<Femtocache> fcs;
  double mbs_radius = 0.0;
  std::uint64_t seed = 0;

  int num_clients() const { return static_cast<int>(clients.size()); }
  int num_fcs() const { return static_cast<int>(fcs.size()); }
};

// Throws InvalidInput when ids are not dense, a Wants file lies in the Has
// set, a file index is out of range, or a client sits outside the macrocell.
void validate_scenario(const Scenario& s);

// Clients within fc.radius of the FC (boundary inclusive), ascending ids.
std::vector<ClientId> coverage_set(const Femtocache& fc, const Scenario& s);

// covered[i][j] == client j is in coverage_set(fcs[i]).
std::vector<std::vector<bool>> coverage_matrix(const Scenario& s);

struct PlacementPlan {
  std::vector<std::vector<FileId>> caches;
  double repetition_index = 0.0;  // R = H_c * C / F
  double B = 0.0;                 // C / R
};

PlacementPlan systematic_placement(int F, int C, int Hc);

// floor(x + 1/2) with a small guard so 0.1 * 10 style products land on 1.
int round_half_up(double x);

enum class FcLayout { UniformRandom, Fixed };

struct ScenarioParams {
  int F = 10;
  int C = 2;
  int U = 10;
  double sigma_u = 0.1;
  double sigma_c = 0.7;
  double fc_radius = 50.0;
  double mbs_radius = 60.0;
  FcLayout fc_layout = FcLayout::UniformRandom;
  std::vector<Point> fc_positions;
  std::uint64_t seed = 1;

  int Hu() const { return round_half_up(sigma_u * F); }
  int Hc() const { return round_half_up(sigma_c * F); }
  bool full_coverage() const { return fc_radius >= 2.0 * mbs_radius; }
};

void validate_params(const ScenarioParams& p);

Scenario generate_scenario(const ScenarioParams& p);

}  // namespace femtonc
