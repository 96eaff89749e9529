#pragma once
// Published reference values for the PRE/ARB grids, transcribed verbatim
// (rounded as printed). Used only by the diff/audit report and golden tests.

#include <array>
#include <limits>
#include <optional>
#include <span>
#include <string_view>

namespace wshrink::published {

inline constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

struct Cell31 {
  int p;
  double q;
  int m;
  double delta1;
  double delta2;
  double delta;
  double pre;
  double arb;
};

struct Cell51 {
  int p;
  double q;
  int m;
  double delta1;
  double delta2;
  double delta;
  double pre;
};

struct WeightHeader {
  int p;
  int m;
  double w;
};

// Printed "Range of Δ" / "Δ_Best" entries for one (p, q, m).
struct RangeEntry {
  int p;
  double q;
  int m;
  double mse_lo, mse_hi;
  double arb_lo, arb_hi;
  double best_lo, best_hi;
  bool arb_verifiable;
  bool best_verifiable;
};

inline constexpr std::array<WeightHeader, 16> kWeights31{{
    {-2, 6, 0.175},
    {-2, 8, 0.397},
    {-2, 10, 0.5369},
    {-2, 12, 0.6305},
    {-1, 6, 0.7739},
    {-1, 8, 0.8537},
    {-1, 10, 0.8939},
    {-1, 12, 0.918},
    {1, 6, 0.6888},
    {1, 8, 0.7737},
    {1, 10, 0.8251},
    {1, 12, 0.8779},
    {2, 6, 0.3131},
    {2, 8, 0.4385},
    {2, 10, 0.5392},
    {2, 12, 0.6816},
}};

inline constexpr std::array<Cell31, 432> kTable31{{
    {-2, 0.25, 6, 0.1, 0.2, 0.15, 35.33, 0.7941},
    {-2, 0.25, 8, 0.1, 0.2, 0.15, 40.2, 0.5804},
    {-2, 0.25, 10, 0.1, 0.2, 0.15, 45.57, 0.4457},
    {-2, 0.25, 12, 0.1, 0.2, 0.15, 50.6, 0.3556},
    {-2, 0.25, 6, 0.4, 0.6, 0.5, 42.62, 0.7219},
    {-2, 0.25, 8, 0.4, 0.6, 0.5, 47.9, 0.5276},
    {-2, 0.25, 10, 0.4, 0.6, 0.5, 53.49, 0.4052},
    {-2, 0.25, 12, 0.4, 0.6, 0.5, 58.53, 0.3233},
    {-2, 0.25, 6, 0.4, 1.6, 1.0, 57.66, 0.6188},
    {-2, 0.25, 8, 0.4, 1.6, 1.0, 63.18, 0.4522},
    {-2, 0.25, 10, 0.4, 1.6, 1.0, 68.54, 0.3473},
    {-2, 0.25, 12, 0.4, 1.6, 1.0, 72.99, 0.2771},
    {-2, 0.25, 6, 1.0, 2.0, 1.5, 82.21, 0.5156},
    {-2, 0.25, 8, 1.0, 2.0, 1.5, 86.53, 0.3769},
    {-2, 0.25, 10, 1.0, 2.0, 1.5, 89.95, 0.2894},
    {-2, 0.25, 12, 1.0, 2.0, 1.5, 92.27, 0.2309},
    {-2, 0.25, 6, 1.6, 2.4, 2.0, 126.15, 0.4125},
    {-2, 0.25, 8, 1.6, 2.4, 2.0, 124.06, 0.3015},
    {-2, 0.25, 10, 1.6, 2.4, 2.0, 120.83, 0.2315},
    {-2, 0.25, 12, 1.6, 2.4, 2.0, 117.72, 0.1847},
    {-2, 0.25, 6, 2.0, 3.0, 2.5, 215.89, 0.3094},
    {-2, 0.25, 8, 2.0, 3.0, 2.5, 187.2, 0.2261},
    {-2, 0.25, 10, 2.0, 3.0, 2.5, 164.84, 0.1737},
    {-2, 0.25, 12, 2.0, 3.0, 2.5, 149.86, 0.1386},
    {-2, 0.25, 6, 2.5, 3.5, 3.0, 438.9, 0.2063},
    {-2, 0.25, 8, 2.5, 3.5, 3.0, 294.12, 0.1507},
    {-2, 0.25, 10, 2.5, 3.5, 3.0, 222.82, 0.1158},
    {-2, 0.25, 12, 2.5, 3.5, 3.0, 186.17, 0.0924},
    {-2, 0.25, 6, 3.5, 3.5, 3.5, 1154.45, 0.1031},
    {-2, 0.25, 8, 3.5, 3.5, 3.5, 447.47, 0.0754},
    {-2, 0.25, 10, 3.5, 3.5, 3.5, 282.42, 0.0579},
    {-2, 0.25, 12, 3.5, 3.5, 3.5, 217.84, 0.0462},
    {-2, 0.25, 6, 3.8, 4.2, 4.0, 2528.52, 0.0},
    {-2, 0.25, 8, 3.8, 4.2, 4.0, 541.6, 0.0},
    {-2, 0.25, 10, 3.8, 4.2, 4.0, 310.07, 0.0},
    {-2, 0.25, 12, 3.8, 4.2, 4.0, 230.93, 0.0},
    {-2, 0.5, 6, 0.1, 0.2, 0.15, 38.21, 0.7632},
    {-2, 0.5, 8, 0.1, 0.2, 0.15, 43.26, 0.5577},
    {-2, 0.5, 10, 0.1, 0.2, 0.15, 48.75, 0.4284},
    {-2, 0.5, 12, 0.1, 0.2, 0.15, 53.81, 0.3418},
    {-2, 0.5, 6, 0.4, 0.6, 0.5, 57.66, 0.6188},
    {-2, 0.5, 8, 0.4, 0.6, 0.5, 63.18, 0.4522},
    {-2, 0.5, 10, 0.4, 0.6, 0.5, 68.54, 0.3473},
    {-2, 0.5, 12, 0.4, 0.6, 0.5, 72.99, 0.2771},
    {-2, 0.5, 6, 0.4, 1.6, 1.0, 126.15, 0.4125},
    {-2, 0.5, 8, 0.4, 1.6, 1.0, 124.06, 0.3015},
    {-2, 0.5, 10, 0.4, 1.6, 1.0, 120.83, 0.2315},
    {-2, 0.5, 12, 0.4, 1.6, 1.0, 117.72, 0.1847},
    {-2, 0.5, 6, 1.0, 2.0, 1.5, 438.9, 0.2063},
    {-2, 0.5, 8, 1.0, 2.0, 1.5, 294.12, 0.1507},
    {-2, 0.5, 10, 1.0, 2.0, 1.5, 222.82, 0.1158},
    {-2, 0.5, 12, 1.0, 2.0, 1.5, 186.17, 0.0924},
    {-2, 0.5, 6, 1.6, 2.4, 2.0, 2528.5, 0.0},
    {-2, 0.5, 8, 1.6, 2.4, 2.0, 541.6, 0.0},
    {-2, 0.5, 10, 1.6, 2.4, 2.0, 310.07, 0.0},
    {-2, 0.5, 12, 1.6, 2.4, 2.0, 230.93, 0.0},
    {-2, 0.5, 6, 2.0, 3.0, 2.5, 438.9, 0.2063},
    {-2, 0.5, 8, 2.0, 3.0, 2.5, 294.12, 0.1507},
    {-2, 0.5, 10, 2.0, 3.0, 2.5, 222.82, 0.1158},
    {-2, 0.5, 12, 2.0, 3.0, 2.5, 186.17, 0.0924},
    {-2, 0.5, 6, 2.5, 3.5, 3.0, 126.15, 0.4125},
    {-2, 0.5, 8, 2.5, 3.5, 3.0, 124.06, 0.3015},
    {-2, 0.5, 10, 2.5, 3.5, 3.0, 120.83, 0.2315},
    {-2, 0.5, 12, 2.5, 3.5, 3.0, 117.72, 0.1847},
    {-2, 0.5, 6, 3.5, 3.5, 3.5, 57.66, 0.6188},
    {-2, 0.5, 8, 3.5, 3.5, 3.5, 63.18, 0.4522},
    {-2, 0.5, 10, 3.5, 3.5, 3.5, 68.54, 0.3473},
    {-2, 0.5, 12, 3.5, 3.5, 3.5, 72.99, 0.2771},
    {-2, 0.5, 6, 3.8, 4.2, 4.0, 32.76, 0.825},
    {-2, 0.5, 8, 3.8, 4.2, 4.0, 37.45, 0.603},
    {-2, 0.5, 10, 3.8, 4.2, 4.0, 42.68, 0.4631},
    {-2, 0.5, 12, 3.8, 4.2, 4.0, 47.65, 0.3695},
    {-2, 0.75, 6, 0.1, 0.2, 0.15, 41.45, 0.7322},
    {-2, 0.75, 8, 0.1, 0.2, 0.15, 46.67, 0.5351},
    {-2, 0.75, 10, 0.1, 0.2, 0.15, 52.25, 0.411},
    {-2, 0.75, 12, 0.1, 0.2, 0.15, 57.3, 0.3279},
    {-2, 0.75, 6, 0.4, 0.6, 0.5, 82.21, 0.5156},
    {-2, 0.75, 8, 0.4, 0.6, 0.5, 86.53, 0.3769},
    {-2, 0.75, 10, 0.4, 0.6, 0.5, 89.95, 0.2894},
    {-2, 0.75, 12, 0.4, 0.6, 0.5, 92.27, 0.2309},
    {-2, 0.75, 6, 0.4, 1.6, 1.0, 438.9, 0.2063},
    {-2, 0.75, 8, 0.4, 1.6, 1.0, 294.12, 0.1507},
    {-2, 0.75, 10, 0.4, 1.6, 1.0, 222.82, 0.1158},
    {-2, 0.75, 12, 0.4, 1.6, 1.0, 186.17, 0.0924},
    {-2, 0.75, 6, 1.0, 2.0, 1.5, 1154.4, 0.1031},
    {-2, 0.75, 8, 1.0, 2.0, 1.5, 447.47, 0.0754},
    {-2, 0.75, 10, 1.0, 2.0, 1.5, 282.42, 0.0579},
    {-2, 0.75, 12, 1.0, 2.0, 1.5, 217.84, 0.0462},
    {-2, 0.75, 6, 1.6, 2.4, 2.0, 126.15, 0.4125},
    {-2, 0.75, 8, 1.6, 2.4, 2.0, 124.06, 0.3015},
    {-2, 0.75, 10, 1.6, 2.4, 2.0, 120.83, 0.2315},
    {-2, 0.75, 12, 1.6, 2.4, 2.0, 117.72, 0.1847},
    {-2, 0.75, 6, 2.0, 3.0, 2.5, 42.62, 0.7219},
    {-2, 0.75, 8, 2.0, 3.0, 2.5, 47.9, 0.5276},
    {-2, 0.75, 10, 2.0, 3.0, 2.5, 53.49, 0.4052},
    {-2, 0.75, 12, 2.0, 3.0, 2.5, 58.53, 0.3233},
    {-2, 0.75, 6, 2.5, 3.5, 3.0, 21.07, 1.0313},
    {-2, 0.75, 8, 2.5, 3.5, 3.0, 24.58, 0.7537},
    {-2, 0.75, 10, 2.5, 3.5, 3.0, 28.74, 0.5789},
    {-2, 0.75, 12, 2.5, 3.5, 3.0, 32.94, 0.4619},
    {-2, 0.75, 6, 3.5, 3.5, 3.5, 12.51, 1.3407},
    {-2, 0.75, 8, 3.5, 3.5, 3.5, 14.82, 0.9798},
    {-2, 0.75, 10, 3.5, 3.5, 3.5, 17.67, 0.7525},
    {-2, 0.75, 12, 3.5, 3.5, 3.5, 20.7, 0.6004},
    {-2, 0.75, 6, 3.8, 4.2, 4.0, 8.27, 1.6501},
    {-2, 0.75, 8, 3.8, 4.2, 4.0, 9.87, 1.2059},
    {-2, 0.75, 10, 3.8, 4.2, 4.0, 11.9, 0.9262},
    {-2, 0.75, 12, 3.8, 4.2, 4.0, 14.09, 0.739},
    {-1, 0.25, 6, 0.1, 0.2, 0.15, 101.69, 0.2176},
    {-1, 0.25, 8, 0.1, 0.2, 0.15, 101.09, 0.1408},
    {-1, 0.25, 10, 0.1, 0.2, 0.15, 100.79, 0.1022},
    {-1, 0.25, 12, 0.1, 0.2, 0.15, 100.61, 0.0789},
    {-1, 0.25, 6, 0.4, 0.6, 0.5, 105.6, 0.1978},
    {-1, 0.25, 8, 0.4, 0.6, 0.5, 103.55, 0.128},
    {-1, 0.25, 10, 0.4, 0.6, 0.5, 102.55, 0.0929},
    {-1, 0.25, 12, 0.4, 0.6, 0.5, 101.96, 0.0718},
    {-1, 0.25, 6, 0.4, 1.6, 1.0, 110.98, 0.1696},
    {-1, 0.25, 8, 0.4, 1.6, 1.0, 106.84, 0.1097},
    {-1, 0.25, 10, 0.4, 1.6, 1.0, 104.87, 0.0796},
    {-1, 0.25, 12, 0.4, 1.6, 1.0, 103.73, 0.0615},
    {-1, 0.25, 6, 1.0, 2.0, 1.5, 115.99, 0.1413},
    {-1, 0.25, 8, 1.0, 2.0, 1.5, 109.79, 0.0914},
    {-1, 0.25, 10, 1.0, 2.0, 1.5, 106.91, 0.0663},
    {-1, 0.25, 12, 1.0, 2.0, 1.5, 105.27, 0.0513},
    {-1, 0.25, 6, 1.6, 2.4, 2.0, 120.43, 0.113},
    {-1, 0.25, 8, 1.6, 2.4, 2.0, 112.32, 0.0731},
    {-1, 0.25, 10, 1.6, 2.4, 2.0, 108.65, 0.0531},
    {-1, 0.25, 12, 1.6, 2.4, 2.0, 106.56, 0.041},
    {-1, 0.25, 6, 2.0, 3.0, 2.5, 124.13, 0.0848},
    {-1, 0.25, 8, 2.0, 3.0, 2.5, 114.38, 0.0549},
    {-1, 0.25, 10, 2.0, 3.0, 2.5, 110.04, 0.0398},
    {-1, 0.25, 12, 2.0, 3.0, 2.5, 107.59, 0.0308},
    {-1, 0.25, 6, 2.5, 3.5, 3.0, 126.91, 0.0565},
    {-1, 0.25, 8, 2.5, 3.5, 3.0, 115.89, 0.0366},
    {-1, 0.25, 10, 2.5, 3.5, 3.0, 111.05, 0.0265},
    {-1, 0.25, 12, 2.5, 3.5, 3.0, 108.34, 0.0205},
    {-1, 0.25, 6, 3.5, 3.5, 3.5, 128.65, 0.0283},
    {-1, 0.25, 8, 3.5, 3.5, 3.5, 116.82, 0.0183},
    {-1, 0.25, 10, 3.5, 3.5, 3.5, 111.67, 0.0133},
    {-1, 0.25, 12, 3.5, 3.5, 3.5, 108.79, 0.0103},
    {-1, 0.25, 6, 3.8, 4.2, 4.0, 129.23, 0.0},
    {-1, 0.25, 8, 3.8, 4.2, 4.0, 117.13, 0.0},
    {-1, 0.25, 10, 3.8, 4.2, 4.0, 111.87, 0.0},
    {-1, 0.25, 12, 3.8, 4.2, 4.0, 108.94, 0.0},
    {-1, 0.5, 6, 0.1, 0.2, 0.15, 103.38, 0.2091},
    {-1, 0.5, 8, 0.1, 0.2, 0.15, 102.16, 0.1353},
    {-1, 0.5, 10, 0.1, 0.2, 0.15, 101.56, 0.0982},
    {-1, 0.5, 12, 0.1, 0.2, 0.15, 101.2, 0.0759},
    {-1, 0.5, 6, 0.4, 0.6, 0.5, 110.98, 0.1696},
    {-1, 0.5, 8, 0.4, 0.6, 0.5, 106.84, 0.1097},
    {-1, 0.5, 10, 0.4, 0.6, 0.5, 104.87, 0.0796},
    {-1, 0.5, 12, 0.4, 0.6, 0.5, 103.73, 0.0615},
    {-1, 0.5, 6, 0.4, 1.6, 1.0, 120.43, 0.113},
    {-1, 0.5, 8, 0.4, 1.6, 1.0, 112.32, 0.0731},
    {-1, 0.5, 10, 0.4, 1.6, 1.0, 108.65, 0.0531},
    {-1, 0.5, 12, 0.4, 1.6, 1.0, 106.56, 0.041},
    {-1, 0.5, 6, 1.0, 2.0, 1.5, 126.91, 0.0565},
    {-1, 0.5, 8, 1.0, 2.0, 1.5, 115.89, 0.0366},
    {-1, 0.5, 10, 1.0, 2.0, 1.5, 111.05, 0.0265},
    {-1, 0.5, 12, 1.0, 2.0, 1.5, 108.34, 0.0205},
    {-1, 0.5, 6, 1.6, 2.4, 2.0, 129.23, 0.0},
    {-1, 0.5, 8, 1.6, 2.4, 2.0, 117.13, 0.0},
    {-1, 0.5, 10, 1.6, 2.4, 2.0, 111.87, 0.0},
    {-1, 0.5, 12, 1.6, 2.4, 2.0, 108.94, 0.0},
    {-1, 0.5, 6, 2.0, 3.0, 2.5, 126.91, 0.0565},
    {-1, 0.5, 8, 2.0, 3.0, 2.5, 115.89, 0.0366},
    {-1, 0.5, 10, 2.0, 3.0, 2.5, 111.05, 0.0265},
    {-1, 0.5, 12, 2.0, 3.0, 2.5, 108.34, 0.0205},
    {-1, 0.5, 6, 2.5, 3.5, 3.0, 120.43, 0.113},
    {-1, 0.5, 8, 2.5, 3.5, 3.0, 112.32, 0.0731},
    {-1, 0.5, 10, 2.5, 3.5, 3.0, 108.65, 0.0531},
    {-1, 0.5, 12, 2.5, 3.5, 3.0, 106.56, 0.041},
    {-1, 0.5, 6, 3.5, 3.5, 3.5, 110.98, 0.1696},
    {-1, 0.5, 8, 3.5, 3.5, 3.5, 106.84, 0.1097},
    {-1, 0.5, 10, 3.5, 3.5, 3.5, 104.87, 0.0796},
    {-1, 0.5, 12, 3.5, 3.5, 3.5, 103.73, 0.0615},
    {-1, 0.5, 6, 3.8, 4.2, 4.0, 100.0, 0.2261},
    {-1, 0.5, 8, 3.8, 4.2, 4.0, 100.0, 0.1463},
    {-1, 0.5, 10, 3.8, 4.2, 4.0, 100.0, 0.1061},
    {-1, 0.5, 12, 3.8, 4.2, 4.0, 100.0, 0.082},
    {-1, 0.75, 6, 0.1, 0.2, 0.15, 105.05, 0.2006},
    {-1, 0.75, 8, 0.1, 0.2, 0.15, 103.21, 0.1298},
    {-1, 0.75, 10, 0.1, 0.2, 0.15, 102.31, 0.0942},
    {-1, 0.75, 12, 0.1, 0.2, 0.15, 101.77, 0.0728},
    {-1, 0.75, 6, 0.4, 0.6, 0.5, 115.99, 0.1413},
    {-1, 0.75, 8, 0.4, 0.6, 0.5, 109.79, 0.0914},
    {-1, 0.75, 10, 0.4, 0.6, 0.5, 106.91, 0.0663},
    {-1, 0.75, 12, 0.4, 0.6, 0.5, 105.27, 0.0513},
    {-1, 0.75, 6, 0.4, 1.6, 1.0, 126.91, 0.0565},
    {-1, 0.75, 8, 0.4, 1.6, 1.0, 115.89, 0.0366},
    {-1, 0.75, 10, 0.4, 1.6, 1.0, 111.05, 0.0265},
    {-1, 0.75, 12, 0.4, 1.6, 1.0, 108.34, 0.0205},
    {-1, 0.75, 6, 1.0, 2.0, 1.5, 128.65, 0.0283},
    {-1, 0.75, 8, 1.0, 2.0, 1.5, 116.82, 0.0183},
    {-1, 0.75, 10, 1.0, 2.0, 1.5, 111.67, 0.0133},
    {-1, 0.75, 12, 1.0, 2.0, 1.5, 108.79, 0.0103},
    {-1, 0.75, 6, 1.6, 2.4, 2.0, 120.43, 0.113},
    {-1, 0.75, 8, 1.6, 2.4, 2.0, 112.32, 0.0731},
    {-1, 0.75, 10, 1.6, 2.4, 2.0, 108.65, 0.0531},
    {-1, 0.75, 12, 1.6, 2.4, 2.0, 106.56, 0.041},
    {-1, 0.75, 6, 2.0, 3.0, 2.5, 105.6, 0.1978},
    {-1, 0.75, 8, 2.0, 3.0, 2.5, 103.55, 0.128},
    {-1, 0.75, 10, 2.0, 3.0, 2.5, 102.55, 0.0929},
    {-1, 0.75, 12, 2.0, 3.0, 2.5, 101.96, 0.0718},
    {-1, 0.75, 6, 2.5, 3.5, 3.0, 88.71, 0.2826},
    {-1, 0.75, 8, 2.5, 3.5, 3.0, 92.4, 0.1828},
    {-1, 0.75, 10, 2.5, 3.5, 3.0, 94.37, 0.1327},
    {-1, 0.75, 12, 2.5, 3.5, 3.0, 95.59, 0.1025},
    {-1, 0.75, 6, 3.5, 3.5, 3.5, 72.93, 0.3674},
    {-1, 0.75, 8, 3.5, 3.5, 3.5, 80.65, 0.2377},
    {-1, 0.75, 10, 3.5, 3.5, 3.5, 85.17, 0.1725},
    {-1, 0.75, 12, 3.5, 3.5, 3.5, 88.13, 0.1333},
    {-1, 0.75, 6, 3.8, 4.2, 4.0, 59.57, 0.4521},
    {-1, 0.75, 8, 3.8, 4.2, 4.0, 69.5, 0.2925},
    {-1, 0.75, 10, 3.8, 4.2, 4.0, 75.85, 0.2123},
    {-1, 0.75, 12, 3.8, 4.2, 4.0, 80.24, 0.164},
    {1, 0.25, 6, 0.1, 0.2, 0.15, 99.0, 0.2996},
    {1, 0.25, 8, 0.1, 0.2, 0.15, 97.51, 0.2178},
    {1, 0.25, 10, 0.1, 0.2, 0.15, 97.21, 0.1684},
    {1, 0.25, 12, 0.1, 0.2, 0.15, 99.2, 0.1175},
    {1, 0.25, 6, 0.4, 0.6, 0.5, 106.26, 0.2723},
    {1, 0.25, 8, 0.4, 0.6, 0.5, 103.17, 0.198},
    {1, 0.25, 10, 0.4, 0.6, 0.5, 101.8, 0.1531},
    {1, 0.25, 12, 0.4, 0.6, 0.5, 102.17, 0.1069},
    {1, 0.25, 6, 0.4, 1.6, 1.0, 117.09, 0.2334},
    {1, 0.25, 8, 0.4, 1.6, 1.0, 111.34, 0.1697},
    {1, 0.25, 10, 0.4, 1.6, 1.0, 108.25, 0.1312},
    {1, 0.25, 12, 0.4, 1.6, 1.0, 106.18, 0.0916},
    {1, 0.25, 6, 1.0, 2.0, 1.5, 128.15, 0.1945},
    {1, 0.25, 8, 1.0, 2.0, 1.5, 119.34, 0.1415},
    {1, 0.25, 10, 1.0, 2.0, 1.5, 114.39, 0.1093},
    {1, 0.25, 12, 1.0, 2.0, 1.5, 109.82, 0.0763},
    {1, 0.25, 6, 1.6, 2.4, 2.0, 138.88, 0.1556},
    {1, 0.25, 8, 1.6, 2.4, 2.0, 126.79, 0.1132},
    {1, 0.25, 10, 1.6, 2.4, 2.0, 119.95, 0.0875},
    {1, 0.25, 12, 1.6, 2.4, 2.0, 113.0, 0.0611},
    {1, 0.25, 6, 2.0, 3.0, 2.5, 148.56, 0.1167},
    {1, 0.25, 8, 2.0, 3.0, 2.5, 133.27, 0.0849},
    {1, 0.25, 10, 2.0, 3.0, 2.5, 124.67, 0.0656},
    {1, 0.25, 12, 2.0, 3.0, 2.5, 115.6, 0.0458},
    {1, 0.25, 6, 2.5, 3.5, 3.0, 156.33, 0.0778},
    {1, 0.25, 8, 2.5, 3.5, 3.0, 138.31, 0.0566},
    {1, 0.25, 10, 2.5, 3.5, 3.0, 128.27, 0.0437},
    {1, 0.25, 12, 2.5, 3.5, 3.0, 117.53, 0.0305},
    {1, 0.25, 6, 3.5, 3.5, 3.5, 161.41, 0.0389},
    {1, 0.25, 8, 3.5, 3.5, 3.5, 141.52, 0.0283},
    {1, 0.25, 10, 3.5, 3.5, 3.5, 130.54, 0.0219},
    {1, 0.25, 12, 3.5, 3.5, 3.5, 118.72, 0.0153},
    {1, 0.25, 6, 3.8, 4.2, 4.0, 163.17, 0.0},
    {1, 0.25, 8, 3.8, 4.2, 4.0, 142.63, 0.0},
    {1, 0.25, 10, 3.8, 4.2, 4.0, 131.31, 0.0},
    {1, 0.25, 12, 3.8, 4.2, 4.0, 119.12, 0.0},
    {1, 0.5, 6, 0.1, 0.2, 0.15, 102.07, 0.2879},
    {1, 0.5, 8, 0.1, 0.2, 0.15, 99.92, 0.2093},
    {1, 0.5, 10, 0.1, 0.2, 0.15, 99.18, 0.1618},
    {1, 0.5, 12, 0.1, 0.2, 0.15, 100.49, 0.113},
    {1, 0.5, 6, 0.4, 0.6, 0.5, 117.09, 0.2334},
    {1, 0.5, 8, 0.4, 0.6, 0.5, 111.34, 0.1697},
    {1, 0.5, 10, 0.4, 0.6, 0.5, 108.25, 0.1312},
    {1, 0.5, 12, 0.4, 0.6, 0.5, 106.18, 0.0916},
    {1, 0.5, 6, 0.4, 1.6, 1.0, 138.88, 0.1556},
    {1, 0.5, 8, 0.4, 1.6, 1.0, 126.79, 0.1132},
    {1, 0.5, 10, 0.4, 1.6, 1.0, 119.95, 0.0875},
    {1, 0.5, 12, 0.4, 1.6, 1.0, 113.0, 0.0611},
    {1, 0.5, 6, 1.0, 2.0, 1.5, 156.33, 0.0778},
    {1, 0.5, 8, 1.0, 2.0, 1.5, 138.31, 0.0566},
    {1, 0.5, 10, 1.0, 2.0, 1.5, 128.27, 0.0437},
    {1, 0.5, 12, 1.0, 2.0, 1.5, 117.53, 0.0305},
    {1, 0.5, 6, 1.6, 2.4, 2.0, 163.17, 0.0},
    {1, 0.5, 8, 1.6, 2.4, 2.0, 142.63, 0.0},
    {1, 0.5, 10, 1.6, 2.4, 2.0, 131.31, 0.0},
    {1, 0.5, 12, 1.6, 2.4, 2.0, 119.12, 0.0},
    {1, 0.5, 6, 2.0, 3.0, 2.5, 156.33, 0.0778},
    {1, 0.5, 8, 2.0, 3.0, 2.5, 138.31, 0.0566},
    {1, 0.5, 10, 2.0, 3.0, 2.5, 128.27, 0.0437},
    {1, 0.5, 12, 2.0, 3.0, 2.5, 117.53, 0.0305},
    {1, 0.5, 6, 2.5, 3.5, 3.0, 138.88, 0.1556},
    {1, 0.5, 8, 2.5, 3.5, 3.0, 126.79, 0.1132},
    {1, 0.5, 10, 2.5, 3.5, 3.0, 119.95, 0.0875},
    {1, 0.5, 12, 2.5, 3.5, 3.0, 113.0, 0.0611},
    {1, 0.5, 6, 3.5, 3.5, 3.5, 117.09, 0.2334},
    {1, 0.5, 8, 3.5, 3.5, 3.5, 111.34, 0.1697},
    {1, 0.5, 10, 3.5, 3.5, 3.5, 108.25, 0.1312},
    {1, 0.5, 12, 3.5, 3.5, 3.5, 106.18, 0.0916},
    {1, 0.5, 6, 3.8, 4.2, 4.0, 96.01, 0.3112},
    {1, 0.5, 8, 3.8, 4.2, 4.0, 95.12, 0.2263},
    {1, 0.5, 10, 3.8, 4.2, 4.0, 95.25, 0.1749},
    {1, 0.5, 12, 3.8, 4.2, 4.0, 97.9, 0.1221},
    {1, 0.75, 6, 0.1, 0.2, 0.15, 105.2, 0.2762},
    {1, 0.75, 8, 0.1, 0.2, 0.15, 102.36, 0.2009},
    {1, 0.75, 10, 0.1, 0.2, 0.15, 101.15, 0.1553},
    {1, 0.75, 12, 0.1, 0.2, 0.15, 101.75, 0.1084},
    {1, 0.75, 6, 0.4, 0.6, 0.5, 128.15, 0.1945},
    {1, 0.75, 8, 0.4, 0.6, 0.5, 119.34, 0.1415},
    {1, 0.75, 10, 0.4, 0.6, 0.5, 114.39, 0.1093},
    {1, 0.75, 12, 0.4, 0.6, 0.5, 109.82, 0.0763},
    {1, 0.75, 6, 0.4, 1.6, 1.0, 156.33, 0.0778},
    {1, 0.75, 8, 0.4, 1.6, 1.0, 138.31, 0.0566},
    {1, 0.75, 10, 0.4, 1.6, 1.0, 128.27, 0.0437},
    {1, 0.75, 12, 0.4, 1.6, 1.0, 117.53, 0.0305},
    {1, 0.75, 6, 1.0, 2.0, 1.5, 161.41, 0.0389},
    {1, 0.75, 8, 1.0, 2.0, 1.5, 141.52, 0.0283},
    {1, 0.75, 10, 1.0, 2.0, 1.5, 130.54, 0.0219},
    {1, 0.75, 12, 1.0, 2.0, 1.5, 118.72, 0.0153},
    {1, 0.75, 6, 1.6, 2.4, 2.0, 138.88, 0.1556},
    {1, 0.75, 8, 1.6, 2.4, 2.0, 126.79, 0.1132},
    {1, 0.75, 10, 1.6, 2.4, 2.0, 119.95, 0.0875},
    {1, 0.75, 12, 1.6, 2.4, 2.0, 113.0, 0.0611},
    {1, 0.75, 6, 2.0, 3.0, 2.5, 106.26, 0.2723},
    {1, 0.75, 8, 2.0, 3.0, 2.5, 103.17, 0.198},
    {1, 0.75, 10, 2.0, 3.0, 2.5, 101.8, 0.1531},
    {1, 0.75, 12, 2.0, 3.0, 2.5, 102.17, 0.1069},
    {1, 0.75, 6, 2.5, 3.5, 3.0, 77.96, 0.3891},
    {1, 0.75, 8, 2.5, 3.5, 3.0, 80.11, 0.2829},
    {1, 0.75, 10, 2.5, 3.5, 3.0, 82.5, 0.2187},
    {1, 0.75, 12, 2.5, 3.5, 3.0, 88.98, 0.1526},
    {1, 0.75, 6, 3.5, 3.5, 3.5, 57.31, 0.5058},
    {1, 0.75, 8, 3.5, 3.5, 3.5, 61.51, 0.3678},
    {1, 0.75, 10, 3.5, 3.5, 3.5, 65.66, 0.2843},
    {1, 0.75, 12, 3.5, 3.5, 3.5, 75.76, 0.1984},
    {1, 0.75, 6, 3.8, 4.2, 4.0, 42.96, 0.6225},
    {1, 0.75, 8, 3.8, 4.2, 4.0, 47.58, 0.4526},
    {1, 0.75, 10, 3.8, 4.2, 4.0, 52.22, 0.3499},
    {1, 0.75, 12, 3.8, 4.2, 4.0, 63.8, 0.2442},
    {2, 0.25, 6, 0.1, 0.2, 0.15, 48.51, 0.6612},
    {2, 0.25, 8, 0.1, 0.2, 0.15, 45.0, 0.5405},
    {2, 0.25, 10, 0.1, 0.2, 0.15, 45.9, 0.4435},
    {2, 0.25, 12, 0.1, 0.2, 0.15, 60.53, 0.3065},
    {2, 0.25, 6, 0.4, 0.6, 0.5, 57.95, 0.6011},
    {2, 0.25, 8, 0.4, 0.6, 0.5, 53.31, 0.4913},
    {2, 0.25, 10, 0.4, 0.6, 0.5, 53.85, 0.4032},
    {2, 0.25, 12, 0.4, 0.6, 0.5, 68.81, 0.2786},
    {2, 0.25, 6, 0.4, 1.6, 1.0, 76.84, 0.5152},
    {2, 0.25, 8, 0.4, 1.6, 1.0, 69.55, 0.4211},
    {2, 0.25, 10, 0.4, 1.6, 1.0, 68.94, 0.3456},
    {2, 0.25, 12, 0.4, 1.6, 1.0, 83.2, 0.2388},
    {2, 0.25, 6, 1.0, 2.0, 1.5, 106.11, 0.4293},
    {2, 0.25, 8, 1.0, 2.0, 1.5, 93.7, 0.3509},
    {2, 0.25, 10, 1.0, 2.0, 1.5, 90.35, 0.288},
    {2, 0.25, 12, 1.0, 2.0, 1.5, 101.08, 0.199},
    {2, 0.25, 6, 1.6, 2.4, 2.0, 154.14, 0.3435},
    {2, 0.25, 8, 1.6, 2.4, 2.0, 130.87, 0.2808},
    {2, 0.25, 10, 1.6, 2.4, 2.0, 121.15, 0.2304},
    {2, 0.25, 12, 1.6, 2.4, 2.0, 122.65, 0.1592},
    {2, 0.25, 6, 2.0, 3.0, 2.5, 237.92, 0.2576},
    {2, 0.25, 8, 2.0, 3.0, 2.5, 189.27, 0.2106},
    {2, 0.25, 10, 2.0, 3.0, 2.5, 164.85, 0.1728},
    {2, 0.25, 12, 2.0, 3.0, 2.5, 147.06, 0.1194},
    {2, 0.25, 6, 2.5, 3.5, 3.0, 388.87, 0.1717},
    {2, 0.25, 8, 2.5, 3.5, 3.0, 277.82, 0.1404},
    {2, 0.25, 10, 2.5, 3.5, 3.0, 222.08, 0.1152},
    {2, 0.25, 12, 2.5, 3.5, 3.0, 171.43, 0.0796},
    {2, 0.25, 6, 3.5, 3.5, 3.5, 627.92, 0.0859},
    {2, 0.25, 8, 3.5, 3.5, 3.5, 386.26, 0.0702},
    {2, 0.25, 10, 3.5, 3.5, 3.5, 280.49, 0.0576},
    {2, 0.25, 12, 3.5, 3.5, 3.5, 190.36, 0.0398},
    {2, 0.25, 6, 3.8, 4.2, 4.0, 789.74, 0.0},
    {2, 0.25, 8, 3.8, 4.2, 4.0, 444.03, 0.0},
    {2, 0.25, 10, 3.8, 4.2, 4.0, 307.45, 0.0},
    {2, 0.25, 12, 3.8, 4.2, 4.0, 197.63, 0.0},
    {2, 0.5, 6, 0.1, 0.2, 0.15, 52.26, 0.6354},
    {2, 0.5, 8, 0.1, 0.2, 0.15, 48.32, 0.5194},
    {2, 0.5, 10, 0.1, 0.2, 0.15, 49.09, 0.4262},
    {2, 0.5, 12, 0.1, 0.2, 0.15, 63.91, 0.2946},
    {2, 0.5, 6, 0.4, 0.6, 0.5, 76.84, 0.5152},
    {2, 0.5, 8, 0.4, 0.6, 0.5, 69.55, 0.4211},
    {2, 0.5, 10, 0.4, 0.6, 0.5, 68.94, 0.3456},
    {2, 0.5, 12, 0.4, 0.6, 0.5, 83.2, 0.2388},
    {2, 0.5, 6, 0.4, 1.6, 1.0, 154.14, 0.3435},
    {2, 0.5, 8, 0.4, 1.6, 1.0, 130.87, 0.2808},
    {2, 0.5, 10, 0.4, 1.6, 1.0, 121.15, 0.2304},
    {2, 0.5, 12, 0.4, 1.6, 1.0, 122.65, 0.1592},
    {2, 0.5, 6, 1.0, 2.0, 1.5, 388.87, 0.1717},
    {2, 0.5, 8, 1.0, 2.0, 1.5, 277.82, 0.1404},
    {2, 0.5, 10, 1.0, 2.0, 1.5, 222.08, 0.1152},
    {2, 0.5, 12, 1.0, 2.0, 1.5, 171.43, 0.0796},
    {2, 0.5, 6, 1.6, 2.4, 2.0, 789.74, 0.0},
    {2, 0.5, 8, 1.6, 2.4, 2.0, 444.03, 0.0},
    {2, 0.5, 10, 1.6, 2.4, 2.0, 307.45, 0.0},
    {2, 0.5, 12, 1.6, 2.4, 2.0, 197.63, 0.0},
    {2, 0.5, 6, 2.0, 3.0, 2.5, 388.87, 0.1717},
    {2, 0.5, 8, 2.0, 3.0, 2.5, 277.82, 0.1404},
    {2, 0.5, 10, 2.0, 3.0, 2.5, 222.08, 0.1152},
    {2, 0.5, 12, 2.0, 3.0, 2.5, 171.43, 0.0796},
    {2, 0.5, 6, 2.5, 3.5, 3.0, 154.14, 0.3435},
    {2, 0.5, 8, 2.5, 3.5, 3.0, 130.87, 0.2808},
    {2, 0.5, 10, 2.5, 3.5, 3.0, 121.15, 0.2304},
    {2, 0.5, 12, 2.5, 3.5, 3.0, 122.65, 0.1592},
    {2, 0.5, 6, 3.5, 3.5, 3.5, 76.84, 0.5152},
    {2, 0.5, 8, 3.5, 3.5, 3.5, 69.55, 0.4211},
    {2, 0.5, 10, 3.5, 3.5, 3.5, 68.94, 0.3456},
    {2, 0.5, 12, 3.5, 3.5, 3.5, 83.2, 0.2388},
    {2, 0.5, 6, 3.8, 4.2, 4.0, 45.14, 0.6869},
    {2, 0.5, 8, 3.8, 4.2, 4.0, 42.0, 0.5615},
    {2, 0.5, 10, 3.8, 4.2, 4.0, 42.99, 0.4608},
    {2, 0.5, 12, 3.8, 4.2, 4.0, 57.36, 0.3184},
    {2, 0.75, 6, 0.1, 0.2, 0.15, 56.45, 0.6096},
    {2, 0.75, 8, 0.1, 0.2, 0.15, 52.0, 0.4983},
    {2, 0.75, 10, 0.1, 0.2, 0.15, 52.6, 0.409},
    {2, 0.75, 12, 0.1, 0.2, 0.15, 67.54, 0.2826},
    {2, 0.75, 6, 0.4, 0.6, 0.5, 106.11, 0.4293},
    {2, 0.75, 8, 0.4, 0.6, 0.5, 93.7, 0.3509},
    {2, 0.75, 10, 0.4, 0.6, 0.5, 90.35, 0.288},
    {2, 0.75, 12, 0.4, 0.6, 0.5, 101.08, 0.199},
    {2, 0.75, 6, 0.4, 1.6, 1.0, 388.87, 0.1717},
    {2, 0.75, 8, 0.4, 1.6, 1.0, 277.82, 0.1404},
    {2, 0.75, 10, 0.4, 1.6, 1.0, 222.08, 0.1152},
    {2, 0.75, 12, 0.4, 1.6, 1.0, 171.43, 0.0796},
    {2, 0.75, 6, 1.0, 2.0, 1.5, 627.92, 0.0859},
    {2, 0.75, 8, 1.0, 2.0, 1.5, 386.26, 0.0702},
    {2, 0.75, 10, 1.0, 2.0, 1.5, 280.49, 0.0576},
    {2, 0.75, 12, 1.0, 2.0, 1.5, 190.36, 0.0398},
    {2, 0.75, 6, 1.6, 2.4, 2.0, 154.14, 0.3435},
    {2, 0.75, 8, 1.6, 2.4, 2.0, 130.87, 0.2808},
    {2, 0.75, 10, 1.6, 2.4, 2.0, 121.15, 0.2304},
    {2, 0.75, 12, 1.6, 2.4, 2.0, 122.65, 0.1592},
    {2, 0.75, 6, 2.0, 3.0, 2.5, 57.95, 0.6011},
    {2, 0.75, 8, 2.0, 3.0, 2.5, 53.31, 0.4913},
    {2, 0.75, 10, 2.0, 3.0, 2.5, 53.85, 0.4032},
    {2, 0.75, 12, 2.0, 3.0, 2.5, 68.81, 0.2786},
    {2, 0.75, 6, 2.5, 3.5, 3.0, 29.5, 0.8587},
    {2, 0.75, 8, 2.5, 3.5, 3.0, 27.83, 0.7019},
    {2, 0.75, 10, 2.5, 3.5, 3.0, 28.97, 0.576},
    {2, 0.75, 12, 2.5, 3.5, 3.0, 41.0, 0.398},
    {2, 0.75, 6, 3.5, 3.5, 3.5, 17.73, 1.1163},
    {2, 0.75, 8, 3.5, 3.5, 3.5, 16.9, 0.9125},
    {2, 0.75, 10, 3.5, 3.5, 3.5, 17.83, 0.7488},
    {2, 0.75, 12, 3.5, 3.5, 3.5, 26.5, 0.5175},
    {2, 0.75, 6, 3.8, 4.2, 4.0, 11.79, 1.3739},
    {2, 0.75, 8, 3.8, 4.2, 4.0, 11.3, 1.123},
    {2, 0.75, 10, 3.8, 4.2, 4.0, 12.01, 0.9216},
    {2, 0.75, 12, 3.8, 4.2, 4.0, 18.33, 0.6369},
}};

inline constexpr std::array<Cell51, 336> kTable51{{
    {-1, 0.25, 6, 0.2, 0.3, 0.25, 50.8},
    {-1, 0.25, 8, 0.2, 0.3, 0.25, 41.39},
    {-1, 0.25, 10, 0.2, 0.3, 0.25, 34.91},
    {-1, 0.25, 12, 0.2, 0.3, 0.25, 30.59},
    {1, 0.25, 6, 0.2, 0.3, 0.25, 49.84},
    {1, 0.25, 8, 0.2, 0.3, 0.25, 40.1},
    {1, 0.25, 10, 0.2, 0.3, 0.25, 34.66},
    {1, 0.25, 12, 0.2, 0.3, 0.25, 31.15},
    {-1, 0.25, 6, 0.4, 0.6, 0.5, 117.6},
    {-1, 0.25, 8, 0.4, 0.6, 0.5, 81.01},
    {-1, 0.25, 10, 0.4, 0.6, 0.5, 67.45},
    {-1, 0.25, 12, 0.4, 0.6, 0.5, 63.17},
    {1, 0.25, 6, 0.4, 0.6, 0.5, 113.9},
    {1, 0.25, 8, 0.4, 0.6, 0.5, 79.57},
    {1, 0.25, 10, 0.4, 0.6, 0.5, 65.63},
    {1, 0.25, 12, 0.4, 0.6, 0.5, 61.55},
    {-1, 0.25, 6, 0.6, 0.9, 0.75, 261.72},
    {-1, 0.25, 8, 0.6, 0.9, 0.75, 227.42},
    {-1, 0.25, 10, 0.6, 0.9, 0.75, 203.08},
    {-1, 0.25, 12, 0.6, 0.9, 0.75, 172.06},
    {1, 0.25, 6, 0.6, 0.9, 0.75, 227.59},
    {1, 0.25, 8, 0.6, 0.9, 0.75, 191.97},
    {1, 0.25, 10, 0.6, 0.9, 0.75, 172.31},
    {1, 0.25, 12, 0.6, 0.9, 0.75, 156.69},
    {-1, 0.25, 6, 0.8, 1.2, 1.0, 548.6},
    {-1, 0.25, 8, 0.8, 1.2, 1.0, 426.98},
    {-1, 0.25, 10, 0.8, 1.2, 1.0, 342.54},
    {-1, 0.25, 12, 0.8, 1.2, 1.0, 286.06},
    {1, 0.25, 6, 0.8, 1.2, 1.0, 454.93},
    {1, 0.25, 8, 0.8, 1.2, 1.0, 355.31},
    {1, 0.25, 10, 0.8, 1.2, 1.0, 293.42},
    {1, 0.25, 12, 0.8, 1.2, 1.0, 262.79},
    {-1, 0.25, 6, 1.0, 1.5, 1.25, 649.95},
    {-1, 0.25, 8, 1.0, 1.5, 1.25, 470.44},
    {-1, 0.25, 10, 1.0, 1.5, 1.25, 375.91},
    {-1, 0.25, 12, 1.0, 1.5, 1.25, 314.98},
    {1, 0.25, 6, 1.0, 1.5, 1.25, 636.21},
    {1, 0.25, 8, 1.0, 1.5, 1.25, 504.49},
    {1, 0.25, 10, 1.0, 1.5, 1.25, 427.74},
    {1, 0.25, 12, 1.0, 1.5, 1.25, 353.74},
    {-1, 0.25, 6, 1.2, 1.8, 1.5, 268.31},
    {-1, 0.25, 8, 1.2, 1.8, 1.5, 189.82},
    {-1, 0.25, 10, 1.2, 1.8, 1.5, 150.17},
    {-1, 0.25, 12, 1.2, 1.8, 1.5, 125.21},
    {1, 0.25, 6, 1.2, 1.8, 1.5, 286.06},
    {1, 0.25, 8, 1.2, 1.8, 1.5, 210.91},
    {1, 0.25, 10, 1.2, 1.8, 1.5, 168.38},
    {1, 0.25, 12, 1.2, 1.8, 1.5, 135.01},
    {-1, 0.25, 6, 1.5, 2.0, 1.75, 80.46},
    {-1, 0.25, 8, 1.5, 2.0, 1.75, 53.66},
    {-1, 0.25, 10, 1.5, 2.0, 1.75, 39.9},
    {-1, 0.25, 12, 1.5, 2.0, 1.75, 31.38},
    {1, 0.25, 6, 1.5, 2.0, 1.75, 82.35},
    {1, 0.25, 8, 1.5, 2.0, 1.75, 55.1},
    {1, 0.25, 10, 1.5, 2.0, 1.75, 40.79},
    {1, 0.25, 12, 1.5, 2.0, 1.75, 31.74},
    {-1, 0.5, 6, 0.2, 0.3, 0.25, 50.84},
    {-1, 0.5, 8, 0.2, 0.3, 0.25, 41.32},
    {-1, 0.5, 10, 0.2, 0.3, 0.25, 34.76},
    {-1, 0.5, 12, 0.2, 0.3, 0.25, 30.39},
    {1, 0.5, 6, 0.2, 0.3, 0.25, 49.9},
    {1, 0.5, 8, 0.2, 0.3, 0.25, 40.03},
    {1, 0.5, 10, 0.2, 0.3, 0.25, 34.45},
    {1, 0.5, 12, 0.2, 0.3, 0.25, 30.87},
    {-1, 0.5, 6, 0.4, 0.6, 0.5, 120.81},
    {-1, 0.5, 8, 0.4, 0.6, 0.5, 82.01},
    {-1, 0.5, 10, 0.4, 0.6, 0.5, 67.97},
    {-1, 0.5, 12, 0.4, 0.6, 0.5, 63.49},
    {1, 0.5, 6, 0.4, 0.6, 0.5, 118.31},
    {1, 0.5, 8, 0.4, 0.6, 0.5, 81.13},
    {1, 0.5, 10, 0.4, 0.6, 0.5, 66.48},
    {1, 0.5, 12, 0.4, 0.6, 0.5, 62.03},
    {-1, 0.5, 6, 0.6, 0.9, 0.75, 298.17},
    {-1, 0.5, 8, 0.6, 0.9, 0.75, 253.12},
    {-1, 0.5, 10, 0.6, 0.9, 0.75, 221.74},
    {-1, 0.5, 12, 0.6, 0.9, 0.75, 184.38},
    {1, 0.5, 6, 0.6, 0.9, 0.75, 271.73},
    {1, 0.5, 8, 0.6, 0.9, 0.75, 225.47},
    {1, 0.5, 10, 0.6, 0.9, 0.75, 198.4},
    {1, 0.5, 12, 0.6, 0.9, 0.75, 173.57},
    {-1, 0.5, 6, 0.8, 1.2, 1.0, 642.86},
    {-1, 0.5, 8, 0.8, 1.2, 1.0, 473.19},
    {-1, 0.5, 10, 0.8, 1.2, 1.0, 368.65},
    {-1, 0.5, 12, 0.8, 1.2, 1.0, 303.15},
    {1, 0.5, 6, 0.8, 1.2, 1.0, 583.65},
    {1, 0.5, 8, 0.8, 1.2, 1.0, 433.16},
    {1, 0.5, 10, 0.8, 1.2, 1.0, 344.05},
    {1, 0.5, 12, 0.8, 1.2, 1.0, 292.64},
    {-1, 0.5, 6, 1.0, 1.5, 1.25, 626.09},
    {-1, 0.5, 8, 1.0, 1.5, 1.25, 435.87},
    {-1, 0.5, 10, 1.0, 1.5, 1.25, 345.16},
    {-1, 0.5, 12, 1.0, 1.5, 1.25, 289.53},
    {1, 0.5, 6, 1.0, 1.5, 1.25, 658.77},
    {1, 0.5, 8, 1.0, 1.5, 1.25, 481.87},
    {1, 0.5, 10, 1.0, 1.5, 1.25, 390.95},
    {1, 0.5, 12, 1.0, 1.5, 1.25, 317.87},
    {-1, 0.5, 6, 1.2, 1.8, 1.5, 247.9},
    {-1, 0.5, 8, 1.2, 1.8, 1.5, 175.97},
    {-1, 0.5, 10, 1.2, 1.8, 1.5, 140.57},
    {-1, 0.5, 12, 1.2, 1.8, 1.5, 118.43},
    {1, 0.5, 6, 1.2, 1.8, 1.5, 264.16},
    {1, 0.5, 8, 1.2, 1.8, 1.5, 191.09},
    {1, 0.5, 10, 1.2, 1.8, 1.5, 152.66},
    {1, 0.5, 12, 1.2, 1.8, 1.5, 124.73},
    {-1, 0.5, 6, 1.5, 2.0, 1.75, 78.41},
    {-1, 0.5, 8, 1.5, 2.0, 1.75, 52.66},
    {-1, 0.5, 10, 1.5, 2.0, 1.75, 39.39},
    {-1, 0.5, 12, 1.5, 2.0, 1.75, 31.11},
    {1, 0.5, 6, 1.5, 2.0, 1.75, 79.96},
    {1, 0.5, 8, 1.5, 2.0, 1.75, 53.72},
    {1, 0.5, 10, 1.5, 2.0, 1.75, 40.02},
    {1, 0.5, 12, 1.5, 2.0, 1.75, 31.36},
    {-1, 0.75, 6, 0.2, 0.3, 0.25, 50.89},
    {-1, 0.75, 8, 0.2, 0.3, 0.25, 41.24},
    {-1, 0.75, 10, 0.2, 0.3, 0.25, 34.6},
    {-1, 0.75, 12, 0.2, 0.3, 0.25, 30.19},
    {1, 0.75, 6, 0.2, 0.3, 0.25, 49.97},
    {1, 0.75, 8, 0.2, 0.3, 0.25, 39.95},
    {1, 0.75, 10, 0.2, 0.3, 0.25, 34.23},
    {1, 0.75, 12, 0.2, 0.3, 0.25, 30.59},
    {-1, 0.75, 6, 0.4, 0.6, 0.5, 124.02},
    {-1, 0.75, 8, 0.4, 0.6, 0.5, 83.01},
    {-1, 0.75, 10, 0.4, 0.6, 0.5, 68.5},
    {-1, 0.75, 12, 0.4, 0.6, 0.5, 63.81},
    {1, 0.75, 6, 0.4, 0.6, 0.5, 122.74},
    {1, 0.75, 8, 0.4, 0.6, 0.5, 82.68},
    {1, 0.75, 10, 0.4, 0.6, 0.5, 67.32},
    {1, 0.75, 12, 0.4, 0.6, 0.5, 62.5},
    {-1, 0.75, 6, 0.6, 0.9, 0.75, 339.92},
    {-1, 0.75, 8, 0.6, 0.9, 0.75, 282.24},
    {-1, 0.75, 10, 0.6, 0.9, 0.75, 242.46},
    {-1, 0.75, 12, 0.6, 0.9, 0.75, 197.73},
    {1, 0.75, 6, 0.6, 0.9, 0.75, 325.66},
    {1, 0.75, 8, 0.6, 0.9, 0.75, 266.36},
    {1, 0.75, 10, 0.6, 0.9, 0.75, 229.58},
    {1, 0.75, 12, 0.6, 0.9, 0.75, 192.68},
    {-1, 0.75, 6, 0.8, 1.2, 1.0, 723.5},
    {-1, 0.75, 8, 0.8, 1.2, 1.0, 510.42},
    {-1, 0.75, 10, 0.8, 1.2, 1.0, 389.34},
    {-1, 0.75, 12, 0.8, 1.2, 1.0, 316.87},
    {1, 0.75, 6, 0.8, 1.2, 1.0, 710.96},
    {1, 0.75, 8, 0.8, 1.2, 1.0, 504.67},
    {1, 0.75, 10, 0.8, 1.2, 1.0, 388.35},
    {1, 0.75, 12, 0.8, 1.2, 1.0, 317.53},
    {-1, 0.75, 6, 1.0, 1.5, 1.25, 566.19},
    {-1, 0.75, 8, 1.0, 1.5, 1.25, 392.47},
    {-1, 0.75, 10, 1.0, 1.5, 1.25, 312.16},
    {-1, 0.75, 12, 1.0, 1.5, 1.25, 263.77},
    {1, 0.75, 6, 1.0, 1.5, 1.25, 597.64},
    {1, 0.75, 8, 1.0, 1.5, 1.25, 421.61},
    {1, 0.75, 10, 1.0, 1.5, 1.25, 337.17},
    {1, 0.75, 12, 1.0, 1.5, 1.25, 278.26},
    {-1, 0.75, 6, 1.2, 1.8, 1.5, 224.67},
    {-1, 0.75, 8, 1.2, 1.8, 1.5, 161.95},
    {-1, 0.75, 10, 1.2, 1.8, 1.5, 131.14},
    {-1, 0.75, 12, 1.2, 1.8, 1.5, 111.81},
    {1, 0.75, 6, 1.2, 1.8, 1.5, 233.41},
    {1, 0.75, 8, 1.2, 1.8, 1.5, 169.19},
    {1, 0.75, 10, 1.2, 1.8, 1.5, 136.65},
    {1, 0.75, 12, 1.2, 1.8, 1.5, 114.63},
    {-1, 0.75, 6, 1.5, 2.0, 1.75, 76.05},
    {-1, 0.75, 8, 1.5, 2.0, 1.75, 51.59},
    {-1, 0.75, 10, 1.5, 2.0, 1.75, 38.85},
    {-1, 0.75, 12, 1.5, 2.0, 1.75, 30.83},
    {1, 0.75, 6, 1.5, 2.0, 1.75, 76.93},
    {1, 0.75, 8, 1.5, 2.0, 1.75, 52.14},
    {1, 0.75, 10, 1.5, 2.0, 1.75, 39.17},
    {1, 0.75, 12, 1.5, 2.0, 1.75, 30.95},
    {-2, 0.25, 6, 0.2, 0.3, 0.25, 46.04},
    {-2, 0.25, 8, 0.2, 0.3, 0.25, 34.18},
    {-2, 0.25, 10, 0.2, 0.3, 0.25, 30.92},
    {-2, 0.25, 12, 0.2, 0.3, 0.25, 30.53},
    {2, 0.25, 6, 0.2, 0.3, 0.25, 46.77},
    {2, 0.25, 8, 0.2, 0.3, 0.25, 34.81},
    {2, 0.25, 10, 0.2, 0.3, 0.25, 30.96},
    {2, 0.25, 12, 0.2, 0.3, 0.25, 31.23},
    {-2, 0.25, 6, 0.4, 0.6, 0.5, 92.48},
    {-2, 0.25, 8, 0.4, 0.6, 0.5, 72.59},
    {-2, 0.25, 10, 0.4, 0.6, 0.5, 59.44},
    {-2, 0.25, 12, 0.4, 0.6, 0.5, 53.42},
    {2, 0.25, 6, 0.4, 0.6, 0.5, 98.0},
    {2, 0.25, 8, 0.4, 0.6, 0.5, 73.36},
    {2, 0.25, 10, 0.4, 0.6, 0.5, 59.48},
    {2, 0.25, 12, 0.4, 0.6, 0.5, 54.88},
    {-2, 0.25, 6, 0.6, 0.9, 0.75, 106.83},
    {-2, 0.25, 8, 0.6, 0.9, 0.75, 95.44},
    {-2, 0.25, 10, 0.6, 0.9, 0.75, 92.75},
    {-2, 0.25, 12, 0.6, 0.9, 0.75, 90.11},
    {2, 0.25, 6, 0.6, 0.9, 0.75, 128.68},
    {2, 0.25, 8, 0.6, 0.9, 0.75, 102.24},
    {2, 0.25, 10, 0.6, 0.9, 0.75, 93.16},
    {2, 0.25, 12, 0.6, 0.9, 0.75, 100.45},
    {-2, 0.25, 6, 0.8, 1.2, 1.0, 145.02},
    {-2, 0.25, 8, 0.8, 1.2, 1.0, 131.16},
    {-2, 0.25, 10, 0.8, 1.2, 1.0, 126.15},
    {-2, 0.25, 12, 0.8, 1.2, 1.0, 122.15},
    {2, 0.25, 6, 0.8, 1.2, 1.0, 191.47},
    {2, 0.25, 8, 0.8, 1.2, 1.0, 145.23},
    {2, 0.25, 10, 0.8, 1.2, 1.0, 126.97},
    {2, 0.25, 12, 0.8, 1.2, 1.0, 144.22},
    {-2, 0.25, 6, 1.0, 1.5, 1.25, 220.29},
    {-2, 0.25, 8, 1.0, 1.5, 1.25, 243.1},
    {-2, 0.25, 10, 1.0, 1.5, 1.25, 282.54},
    {-2, 0.25, 12, 1.0, 1.5, 1.25, 320.74},
    {2, 0.25, 6, 1.0, 1.5, 1.25, 305.32},
    {2, 0.25, 8, 1.0, 1.5, 1.25, 273.81},
    {2, 0.25, 10, 1.0, 1.5, 1.25, 284.6},
    {2, 0.25, 12, 1.0, 1.5, 1.25, 368.42},
    {-2, 0.25, 6, 1.2, 1.8, 1.5, 208.14},
    {-2, 0.25, 8, 1.2, 1.8, 1.5, 211.32},
    {-2, 0.25, 10, 1.2, 1.8, 1.5, 202.36},
    {-2, 0.25, 12, 1.2, 1.8, 1.5, 179.81},
    {2, 0.25, 6, 1.2, 1.8, 1.5, 250.2},
    {2, 0.25, 8, 1.2, 1.8, 1.5, 220.57},
    {2, 0.25, 10, 1.2, 1.8, 1.5, 202.56},
    {2, 0.25, 12, 1.2, 1.8, 1.5, 175.49},
    {-2, 0.25, 6, 1.5, 2.0, 1.75, 82.08},
    {-2, 0.25, 8, 1.5, 2.0, 1.75, 57.89},
    {-2, 0.25, 10, 1.5, 2.0, 1.75, 43.07},
    {-2, 0.25, 12, 1.5, 2.0, 1.75, 33.36},
    {2, 0.25, 6, 1.5, 2.0, 1.75, 84.21},
    {2, 0.25, 8, 1.5, 2.0, 1.75, 57.95},
    {2, 0.25, 10, 1.5, 2.0, 1.75, 43.06},
    {2, 0.25, 12, 1.5, 2.0, 1.75, 33.12},
    {-2, 0.5, 6, 0.2, 0.3, 0.25, 46.28},
    {-2, 0.5, 8, 0.2, 0.3, 0.25, 34.31},
    {-2, 0.5, 10, 0.2, 0.3, 0.25, 30.86},
    {-2, 0.5, 12, 0.2, 0.3, 0.25, 30.24},
    {2, 0.5, 6, 0.2, 0.3, 0.25, 46.95},
    {2, 0.5, 8, 0.2, 0.3, 0.25, 34.91},
    {2, 0.5, 10, 0.2, 0.3, 0.25, 30.9},
    {2, 0.5, 12, 0.2, 0.3, 0.25, 30.87},
    {-2, 0.5, 6, 0.4, 0.6, 0.5, 103.18},
    {-2, 0.5, 8, 0.4, 0.6, 0.5, 76.82},
    {-2, 0.5, 10, 0.4, 0.6, 0.5, 61.54},
    {-2, 0.5, 12, 0.4, 0.6, 0.5, 54.8},
    {2, 0.5, 6, 0.4, 0.6, 0.5, 107.21},
    {2, 0.5, 8, 0.4, 0.6, 0.5, 77.31},
    {2, 0.5, 10, 0.4, 0.6, 0.5, 61.57},
    {2, 0.5, 12, 0.4, 0.6, 0.5, 56.08},
    {-2, 0.5, 6, 0.6, 0.9, 0.75, 157.81},
    {-2, 0.5, 8, 0.6, 0.9, 0.75, 135.64},
    {-2, 0.5, 10, 0.6, 0.9, 0.75, 127.02},
    {-2, 0.5, 12, 0.6, 0.9, 0.75, 118.59},
    {2, 0.5, 6, 0.6, 0.9, 0.75, 181.6},
    {2, 0.5, 8, 0.6, 0.9, 0.75, 142.94},
    {2, 0.5, 10, 0.6, 0.9, 0.75, 127.44},
    {2, 0.5, 12, 0.6, 0.9, 0.75, 128.23},
    {-2, 0.5, 6, 0.8, 1.2, 1.0, 267.16},
    {-2, 0.5, 8, 0.8, 1.2, 1.0, 228.67},
    {-2, 0.5, 10, 0.8, 1.2, 1.0, 207.62},
    {-2, 0.5, 12, 0.8, 1.2, 1.0, 190.69},
    {2, 0.5, 6, 0.8, 1.2, 1.0, 331.58},
    {2, 0.5, 8, 0.8, 1.2, 1.0, 246.71},
    {2, 0.5, 10, 0.8, 1.2, 1.0, 208.58},
    {2, 0.5, 12, 0.8, 1.2, 1.0, 212.2},
    {-2, 0.5, 6, 1.0, 1.5, 1.25, 445.44},
    {-2, 0.5, 8, 1.0, 1.5, 1.25, 443.06},
    {-2, 0.5, 10, 1.0, 1.5, 1.25, 448.55},
    {-2, 0.5, 12, 1.0, 1.5, 1.25, 438.38},
    {2, 0.5, 6, 1.0, 1.5, 1.25, 541.6},
    {2, 0.5, 8, 1.0, 1.5, 1.25, 467.49},
    {2, 0.5, 10, 1.0, 1.5, 1.25, 449.42},
    {2, 0.5, 12, 1.0, 1.5, 1.25, 432.21},
    {-2, 0.5, 6, 1.2, 1.8, 1.5, 289.7},
    {-2, 0.5, 8, 1.2, 1.8, 1.5, 240.03},
    {-2, 0.5, 10, 1.2, 1.8, 1.5, 198.56},
    {-2, 0.5, 12, 1.2, 1.8, 1.5, 163.98},
    {2, 0.5, 6, 1.2, 1.8, 1.5, 298.93},
    {2, 0.5, 8, 1.2, 1.8, 1.5, 238.16},
    {2, 0.5, 10, 1.2, 1.8, 1.5, 198.3},
    {2, 0.5, 12, 1.2, 1.8, 1.5, 156.4},
    {-2, 0.5, 6, 1.5, 2.0, 1.75, 84.92},
    {-2, 0.5, 8, 1.5, 2.0, 1.75, 57.28},
    {-2, 0.5, 10, 1.5, 2.0, 1.75, 42.13},
    {-2, 0.5, 12, 1.5, 2.0, 1.75, 32.67},
    {2, 0.5, 6, 1.5, 2.0, 1.75, 84.44},
    {2, 0.5, 8, 1.5, 2.0, 1.75, 57.03},
    {2, 0.5, 10, 1.5, 2.0, 1.75, 42.12},
    {2, 0.5, 12, 1.5, 2.0, 1.75, 32.44},
    {-2, 0.75, 6, 0.2, 0.3, 0.25, 46.5},
    {-2, 0.75, 8, 0.2, 0.3, 0.25, 34.43},
    {-2, 0.75, 10, 0.2, 0.3, 0.25, 30.78},
    {-2, 0.75, 12, 0.2, 0.3, 0.25, 29.92},
    {2, 0.75, 6, 0.2, 0.3, 0.25, 47.13},
    {2, 0.75, 8, 0.2, 0.3, 0.25, 34.99},
    {2, 0.75, 10, 0.2, 0.3, 0.25, 30.82},
    {2, 0.75, 12, 0.2, 0.3, 0.25, 30.5},
    {-2, 0.75, 6, 0.4, 0.6, 0.5, 114.64},
    {-2, 0.75, 8, 0.4, 0.6, 0.5, 81.04},
    {-2, 0.75, 10, 0.4, 0.6, 0.5, 63.59},
    {-2, 0.75, 12, 0.4, 0.6, 0.5, 56.13},
    {2, 0.75, 6, 0.4, 0.6, 0.5, 116.87},
    {2, 0.75, 8, 0.4, 0.6, 0.5, 81.23},
    {2, 0.75, 10, 0.4, 0.6, 0.5, 63.61},
    {2, 0.75, 12, 0.4, 0.6, 0.5, 57.24},
    {-2, 0.75, 6, 0.6, 0.9, 0.75, 247.11},
    {-2, 0.75, 8, 0.6, 0.9, 0.75, 202.9},
    {-2, 0.75, 10, 0.6, 0.9, 0.75, 181.31},
    {-2, 0.75, 12, 0.6, 0.9, 0.75, 160.85},
    {2, 0.75, 6, 0.6, 0.9, 0.75, 266.6},
    {2, 0.75, 8, 0.6, 0.9, 0.75, 209.0},
    {2, 0.75, 10, 0.6, 0.9, 0.75, 181.65},
    {2, 0.75, 12, 0.6, 0.9, 0.75, 167.34},
    {-2, 0.75, 6, 0.8, 1.2, 1.0, 543.26},
    {-2, 0.75, 8, 0.8, 1.2, 1.0, 418.4},
    {-2, 0.75, 10, 0.8, 1.2, 1.0, 345.15},
    {-2, 0.75, 12, 0.8, 1.2, 1.0, 293.9},
    {2, 0.75, 6, 0.8, 1.2, 1.0, 596.79},
    {2, 0.75, 8, 0.8, 1.2, 1.0, 430.93},
    {2, 0.75, 10, 0.8, 1.2, 1.0, 345.67},
    {2, 0.75, 12, 0.8, 1.2, 1.0, 302.22},
    {-2, 0.75, 6, 1.0, 1.5, 1.25, 704.42},
    {-2, 0.75, 8, 1.0, 1.5, 1.25, 541.77},
    {-2, 0.75, 10, 1.0, 1.5, 1.25, 447.06},
    {-2, 0.75, 12, 1.0, 1.5, 1.25, 381.03},
    {2, 0.75, 6, 1.0, 1.5, 1.25, 696.36},
    {2, 0.75, 8, 1.0, 1.5, 1.25, 532.12},
    {2, 0.75, 10, 1.0, 1.5, 1.25, 446.25},
    {2, 0.75, 12, 1.0, 1.5, 1.25, 358.48},
    {-2, 0.75, 6, 1.2, 1.8, 1.5, 280.39},
    {-2, 0.75, 8, 1.2, 1.8, 1.5, 203.46},
    {-2, 0.75, 10, 1.2, 1.8, 1.5, 160.74},
    {-2, 0.75, 12, 1.2, 1.8, 1.5, 132.95},
    {2, 0.75, 6, 1.2, 1.8, 1.5, 269.47},
    {2, 0.75, 8, 1.2, 1.8, 1.5, 199.82},
    {2, 0.75, 10, 1.2, 1.8, 1.5, 160.55},
    {2, 0.75, 12, 1.2, 1.8, 1.5, 129.07},
    {-2, 0.75, 6, 1.5, 2.0, 1.75, 81.39},
    {-2, 0.75, 8, 1.5, 2.0, 1.75, 54.49},
    {-2, 0.75, 10, 1.5, 2.0, 1.75, 40.4},
    {-2, 0.75, 12, 1.5, 2.0, 1.75, 31.66},
    {2, 0.75, 6, 1.5, 2.0, 1.75, 80.35},
    {2, 0.75, 8, 1.5, 2.0, 1.75, 54.26},
    {2, 0.75, 10, 1.5, 2.0, 1.75, 40.39},
    {2, 0.75, 12, 1.5, 2.0, 1.75, 31.52},
}};

// The ARB range for m=12 is not printed (the row holds only seven pairs).
// p=1, q=0.25: the ARB pairs and Δ_Best row repeat the p=-1 block and break
// the 1/q scaling obeyed by the q=0.50 and q=0.75 rows; kept but flagged.
inline constexpr std::array<RangeEntry, 48> kRanges31{{
    {-2, 0.25, 6, 1.74, 6.25, 2.9, 5.09, 2.9, 5.09, true, true},
    {-2, 0.25, 8, 1.7, 6.29, 3.02, 4.97, 3.02, 4.97, true, true},
    {-2, 0.25, 10, 1.68, 6.31, 3.08, 4.91, 3.08, 4.91, true, true},
    {-2, 0.25, 12, 1.66, 6.33, kNaN, kNaN, 3.11, 4.88, false, true},
    {-2, 0.5, 6, 0.87, 3.13, 1.45, 2.55, 1.45, 2.55, true, true},
    {-2, 0.5, 8, 0.85, 3.15, 1.51, 2.49, 1.51, 2.49, true, true},
    {-2, 0.5, 10, 0.84, 3.16, 1.54, 2.46, 1.54, 2.46, true, true},
    {-2, 0.5, 12, 0.83, 3.17, kNaN, kNaN, 1.56, 2.44, false, true},
    {-2, 0.75, 6, 0.58, 2.09, 0.97, 1.7, 0.97, 1.7, true, true},
    {-2, 0.75, 8, 0.57, 2.1, 1.01, 1.66, 1.01, 1.66, true, true},
    {-2, 0.75, 10, 0.56, 2.11, 1.03, 1.64, 1.03, 1.64, true, true},
    {-2, 0.75, 12, 0.56, 2.11, kNaN, kNaN, 1.04, 1.63, false, true},
    {-1, 0.25, 6, 0.0, 8.0, 0.0, 8.0, 0.0, 8.0, true, true},
    {-1, 0.25, 8, 0.0, 8.0, 0.0, 8.0, 0.0, 8.0, true, true},
    {-1, 0.25, 10, 0.0, 8.0, 0.0, 8.0, 0.0, 8.0, true, true},
    {-1, 0.25, 12, 0.0, 8.0, kNaN, kNaN, 0.0, 8.0, false, true},
    {-1, 0.5, 6, 0.0, 4.0, 0.0, 4.0, 0.0, 4.0, true, true},
    {-1, 0.5, 8, 0.0, 4.0, 0.0, 4.0, 0.0, 4.0, true, true},
    {-1, 0.5, 10, 0.0, 4.0, 0.0, 4.0, 0.0, 4.0, true, true},
    {-1, 0.5, 12, 0.0, 4.0, kNaN, kNaN, 0.0, 4.0, false, true},
    {-1, 0.75, 6, 0.0, 2.67, 0.0, 2.67, 0.0, 2.67, true, true},
    {-1, 0.75, 8, 0.0, 2.67, 0.0, 2.67, 0.0, 2.67, true, true},
    {-1, 0.75, 10, 0.0, 2.67, 0.0, 2.67, 0.0, 2.67, true, true},
    {-1, 0.75, 12, 0.0, 2.67, kNaN, kNaN, 0.0, 2.67, false, true},
    {1, 0.25, 6, 0.2, 7.8, 0.0, 8.0, 0.2, 7.8, false, false},
    {1, 0.25, 8, 0.3, 7.7, 0.0, 8.0, 0.3, 7.7, false, false},
    {1, 0.25, 10, 0.36, 7.64, 0.0, 8.0, 0.36, 7.64, false, false},
    {1, 0.25, 12, 0.24, 7.76, kNaN, kNaN, 0.24, 7.76, false, false},
    {1, 0.5, 6, 0.1, 3.9, 0.55, 3.45, 0.55, 3.45, true, true},
    {1, 0.5, 8, 0.15, 3.85, 0.71, 3.29, 0.71, 3.29, true, true},
    {1, 0.5, 10, 0.18, 3.82, 0.79, 3.21, 0.79, 3.21, true, true},
    {1, 0.5, 12, 0.12, 3.88, kNaN, kNaN, 0.66, 3.34, false, true},
    {1, 0.75, 6, 0.07, 2.6, 0.37, 2.3, 0.37, 2.3, true, true},
    {1, 0.75, 8, 0.1, 2.57, 0.47, 2.2, 0.47, 2.2, true, true},
    {1, 0.75, 10, 0.12, 2.55, 0.52, 2.14, 0.52, 2.14, true, true},
    {1, 0.75, 12, 0.08, 2.59, kNaN, kNaN, 0.44, 2.23, false, true},
    {2, 0.25, 6, 1.41, 6.59, 2.68, 5.32, 2.68, 5.32, true, true},
    {2, 0.25, 8, 1.6, 6.4, 2.96, 5.04, 2.96, 5.04, true, true},
    {2, 0.25, 10, 1.68, 6.32, 3.08, 4.92, 3.08, 4.92, true, true},
    {2, 0.25, 12, 1.47, 6.53, kNaN, kNaN, 2.97, 5.03, false, true},
    {2, 0.5, 6, 0.71, 3.29, 1.34, 2.66, 1.34, 2.66, true, true},
    {2, 0.5, 8, 0.8, 3.2, 1.48, 2.52, 1.48, 2.52, true, true},
    {2, 0.5, 10, 0.84, 3.16, 1.54, 2.46, 1.54, 2.46, true, true},
    {2, 0.5, 12, 0.74, 3.26, kNaN, kNaN, 1.49, 2.51, false, true},
    {2, 0.75, 6, 0.47, 2.2, 0.89, 1.77, 0.89, 1.77, true, true},
    {2, 0.75, 8, 0.53, 2.13, 0.99, 1.68, 0.99, 1.68, true, true},
    {2, 0.75, 10, 0.56, 2.11, 1.03, 1.64, 1.03, 1.64, true, true},
    {2, 0.75, 12, 0.49, 2.18, kNaN, kNaN, 0.99, 1.68, false, true},
}};

inline std::optional<double> weight31(int p, int m) {
  for (const auto& e : kWeights31)
    if (e.p == p && e.m == m) return e.w;
  return std::nullopt;
}

}  // namespace wshrink::published
