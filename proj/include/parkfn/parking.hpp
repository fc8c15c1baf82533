#pragma once

#include <optional>
#include <string_view>
#include <vector>

namespace pf {

// Car preferences a_1..a_m on a street with `spots` spaces, all 1-based.
struct PrefVector {
  std::vector<int> prefs;
  int spots = 0;

  int cars() const { return static_cast<int>(prefs.size()); }
  bool valid() const;
};

// Successful parking outcome: spot_of_car[i] is the space taken by car i+1.
struct Outcome {
  std::vector<int> spot_of_car;
};

struct ParkResult {
  bool success = false;
  int failed_car = -1;  // 1-based index of the first car that cannot park
  Outcome outcome;      // meaningful only on success
};

// Classical protocol: car drives to its preference, then scans forward;
// a scan past the last spot fails immediately and later cars are skipped.
ParkResult park_deterministic(const PrefVector& v);

// Sorted-rearrangement test b_i <= i. Agrees with park_deterministic
// success when cars == spots.
bool is_parking_function(const PrefVector& v);

bool is_u_parking(const PrefVector& v, const std::vector<int>& u);
bool is_rk_parking(const PrefVector& v, int r, int k);
// At least j+1 cars prefer the first j spots, for every j <= n-1 (cars == spots).
bool is_prime_parking(const PrefVector& v);
// Parks deterministically with every per-car displacement <= 1 (cars == spots).
bool is_unit_interval_parking(const PrefVector& v);

std::vector<int> rk_to_u(int m, int r, int k);  // u_i = k + (i-1) r

struct StatRecord {
  int unl = 0;    // cars that missed their preference
  int lucky = 0;  // cars that got it
  int dis = 0;    // total displacement, sum |b_i - a_i|
  int des = 0;    // descents of the inverse outcome (per segment, summed)
  int rlm = 0;    // right-to-left maxima of the inverse outcome (per segment)
  int rep = 0;    // positions i with a_i = a_{i-1}
  int lel = 0;    // entries equal to a_1
  int one = 0;    // entries equal to 1
  int nlel = 0;   // entries equal to a_2 (= lel when there is one car)
  std::vector<int> per_car_displacement;
};

// Statistics of one (vector, outcome) pair. The outcome may come from the
// deterministic protocol or from one probabilistic branch; displacement is
// |b_i - a_i| either way. For m < spots the occupied spots split into
// maximal consecutive runs and des/rlm are computed per run and summed.
StatRecord compute_stats(const PrefVector& v, const Outcome& out);

enum class Stat { unl, lucky, dis, des, rlm, rep, lel, one, nlel };
int stat_value(const StatRecord& r, Stat s);
std::optional<Stat> stat_from_name(std::string_view name);
std::string_view stat_name(Stat s);

}  // namespace pf
