#ifndef CA_IO_HPP
#define CA_IO_HPP

#include <optional>
#include <string>

#include "ca/groebner.hpp"
#include "ca/resolution.hpp"

namespace ca {

// 64-bit FNV-1a digest of a byte string, printed as 16 hex digits.
std::string fnv1a_hex(const std::string& data);

// Content key for a computation: field, order, variable names, generators in
// canonical printed form, operation name, parameters. Spelling differences in
// the input text disappear because hashing happens after parsing and
// canonical reprinting.
std::string cache_key(const IdealPresentation& I, const std::string& operation,
                      const std::string& params = "");

// Directory-backed store for expensive artifacts (reduced bases,
// resolutions). Every entry carries its own digest on the first line,
// verified on load; a mismatch counts as corruption, warns on stderr, and
// reads as a miss so the caller recomputes. Writes go to a temporary file
// renamed into place, so concurrent readers never observe a partial entry.
class ResultCache {
  public:
    ResultCache() = default;  // disabled: loads miss, stores are dropped
    explicit ResultCache(const std::string& dir);

    bool enabled() const { return !dir_.empty(); }
    std::optional<std::string> load(const std::string& key);
    void store(const std::string& key, const std::string& payload) const;

    int hits = 0;
    int misses = 0;
    int corrupt = 0;

  private:
    std::string dir_;
};

// Text round-trip for cacheable artifacts. Elements are reprinted with the
// presentation's variable names and reparsed on load, so a loaded artifact
// compares equal to a freshly computed one.
std::string serialize_basis(const GroebnerBasis& gb, const IdealPresentation& I);
GroebnerBasis deserialize_basis(const std::string& payload, const IdealPresentation& I);
std::string serialize_resolution(const Resolution& R, const IdealPresentation& I);
Resolution deserialize_resolution(const std::string& payload, const IdealPresentation& I);

// Cache-aware fronts: consult the cache when enabled, otherwise compute and
// store. Results are identical with and without a cache directory.
GroebnerBasis cached_groebner(ResultCache& cache, const IdealPresentation& I);
Resolution cached_resolution(ResultCache& cache, const IdealPresentation& I);

}  // namespace ca

#endif
