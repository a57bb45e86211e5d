#include "meanomega/bucket_cache.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

namespace meanomega {

static constexpr const char* kMagic = "# meanomega-buckets v1";
static constexpr const char* kHeader = "x,w,T";

void write_bucket_cache(std::ostream& os, const std::vector<OmegaBuckets>& buckets) {
  os << kMagic << '\n' << kHeader << '\n';
  for (const auto& b : buckets)
    for (std::size_t w = 0; w < b.T.size(); ++w)
      os << b.x << ',' << w << ',' << b.T[w] << '\n';
}

void write_bucket_cache(const std::string& path, const std::vector<OmegaBuckets>& buckets) {
  std::ofstream os(path, std::ios::binary);  // binary: no newline translation
  if (!os) throw CacheError("cannot open cache for writing: " + path);
  write_bucket_cache(os, buckets);
  os.flush();
  if (!os) throw CacheError("write failed: " + path);
}

static std::uint64_t parse_u64(const std::string& s, const char* what) {
  std::uint64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size())
    throw CacheError(std::string("corrupt cache: bad ") + what + " field '" + s + "'");
  return v;
}

std::vector<OmegaBuckets> read_bucket_cache(std::istream& is) {
  std::string line;
  if (!std::getline(is, line) || line != kMagic)
    throw CacheError("corrupt cache: missing version line");
  if (!std::getline(is, line) || line != kHeader)
    throw CacheError("corrupt cache: missing column header");

  std::vector<OmegaBuckets> out;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    std::istringstream row(line);
    std::string xs, ws, ts;
    if (!std::getline(row, xs, ',') || !std::getline(row, ws, ',') ||
        !std::getline(row, ts))
      throw CacheError("corrupt cache: short row '" + line + "'");
    std::uint64_t x = parse_u64(xs, "x");
    std::uint64_t w = parse_u64(ws, "w");
    std::uint64_t t = parse_u64(ts, "T");
    if (out.empty() || out.back().x != x) {
      if (!out.empty() && x <= out.back().x)
        throw CacheError("corrupt cache: checkpoints not ascending");
      out.push_back({x, {}});
    }
    if (w != out.back().T.size())
      throw CacheError("corrupt cache: bucket rows not consecutive");
    out.back().T.push_back(t);
  }
  if (out.empty()) throw CacheError("corrupt cache: no data rows");
  return out;
}

std::vector<OmegaBuckets> read_bucket_cache(const std::string& path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) throw CacheError("cannot open cache: " + path);
  return read_bucket_cache(is);
}

} // namespace meanomega
