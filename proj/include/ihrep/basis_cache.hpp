#pragma once

#include "ihrep/groebner.hpp"

#include <filesystem>
#include <future>
#include <map>
#include <memory>
#include <mutex>
#include <optional>

namespace ihrep {

/// Environment variable naming a directory of serialized relation-ideal bases.
inline constexpr const char* kCacheDirEnv = "IHREP_GB_CACHE";

/// Computes each relation-ideal basis relation_ideal_basis(k) at most once and
/// shares it immutably. With a directory, bases are also read from and written
/// to disk in canonical text form; a file that fails validation is recomputed.
class BasisCache {
public:
    BasisCache() = default;
    explicit BasisCache(std::optional<std::filesystem::path> directory) : directory_(std::move(directory)) {}
    BasisCache(const BasisCache&) = delete;
    BasisCache& operator=(const BasisCache&) = delete;

    static std::unique_ptr<BasisCache> from_environment();
    /// Process-wide memory-only cache.
    static BasisCache& shared();

    std::shared_ptr<const GroebnerBasis> get(unsigned k);

    const std::optional<std::filesystem::path>& directory() const { return directory_; }
    std::filesystem::path file_for(unsigned k) const;

private:
    std::optional<GroebnerBasis> load(unsigned k) const;
    void store(const GroebnerBasis& basis, unsigned k) const;

    std::optional<std::filesystem::path> directory_;
    std::mutex mutex_;
    std::map<unsigned, std::shared_future<std::shared_ptr<const GroebnerBasis>>> entries_;
};

}  // namespace ihrep
