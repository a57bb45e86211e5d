#pragma once
// Versioned checkpoint cache for OmegaBuckets, so the expensive sieve runs
// once and every per-k analysis replays from disk.  Bit-exact round-trip.
//
// Format: line 1 `# meanomega-buckets v1`, line 2 `x,w,T`, then one row
// per (checkpoint, w) with decimal integers, x ascending, w ascending.

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "meanomega/sieve.hpp"

namespace meanomega {

struct CacheError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void write_bucket_cache(std::ostream& os, const std::vector<OmegaBuckets>& buckets);
void write_bucket_cache(const std::string& path, const std::vector<OmegaBuckets>& buckets);

std::vector<OmegaBuckets> read_bucket_cache(std::istream& is);
std::vector<OmegaBuckets> read_bucket_cache(const std::string& path);

} // namespace meanomega
