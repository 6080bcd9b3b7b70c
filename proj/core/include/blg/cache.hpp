#pragma once

#include <map>
#include <mutex>
#include <optional>
#include <string>

#include "blg/hommatrix.hpp"

namespace blg {

// Persistent homomorphism-count cache: an append-only log of
// (canonical source certificate, canonical target certificate, count)
// records with per-record checksums. A corrupt tail is dropped on load.
class HomCache {
  public:
    HomCache() = default;                    // disabled
    explicit HomCache(std::string dir);      // empty dir -> disabled
    static HomCache from_env();              // honours BLG_CACHE_DIR

    bool enabled() const { return !path_.empty(); }

    std::optional<BigInt> lookup(const Graph& k, const Graph& g);
    void store(const Graph& k, const Graph& g, const BigInt& count);

    // hom_count_dp with lookup/store around it; identical results either way.
    BigInt count(const Graph& k, const Graph& g);

  private:
    std::string path_;
    std::map<std::pair<std::string, std::string>, BigInt> table_;
    std::mutex mu_;

    void load();
};

}  // namespace blg
