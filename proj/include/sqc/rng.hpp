#ifndef SQC_RNG_HPP
#define SQC_RNG_HPP

#include <cstdint>
#include <random>

namespace sqc {

// splitmix64 step; used to decorrelate (master seed, stream id) pairs.
inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

inline std::uint64_t mix_seed(std::uint64_t master, std::uint64_t stream) {
  return splitmix64(splitmix64(master) ^ splitmix64(stream + 0x51'7c'c1'b7'27'22'0a'95ULL));
}

// One independent random stream. Every Monte-Carlo trial owns a private
// stream derived from (master seed, trial index), so results do not depend
// on execution order across trials.
class RngStream {
 public:
  RngStream(std::uint64_t master_seed, std::uint64_t stream_id)
      : engine_(mix_seed(master_seed, stream_id)) {}

  double normal() { return normal_(engine_); }
  double normal(double mean, double sigma) {
    return sigma > 0.0 ? mean + sigma * normal_(engine_) : mean;
  }
  double uniform() { return uniform_(engine_); }
  std::mt19937_64& engine() { return engine_; }

 private:
  std::mt19937_64 engine_;
  std::normal_distribution<double> normal_{0.0, 1.0};
  std::uniform_real_distribution<double> uniform_{0.0, 1.0};
};

}  // namespace sqc

#endif
