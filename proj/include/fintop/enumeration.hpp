#pragma once

// Exhaustive enumeration of topologies and maps, homeomorphism-class
// canonicalization, and the on-disk catalog cache.
//
// The generator walks minimal open neighbourhoods: a topology on {0..n-1} is
// determined by rows u[0..n-1] where u[x] is the smallest open set containing
// x, subject to "y in u[x] implies u[y] <= u[x]". Rows are assigned in
// ascending mask order with pairwise pruning, so the generation order is
// deterministic; the open sets are exactly the unions of rows.

#include <algorithm>
#include <atomic>
#include <charconv>
#include <chrono>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <functional>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <thread>
#include <vector>

#include "fintop/errors.hpp"
#include "fintop/map.hpp"
#include "fintop/mask.hpp"
#include "fintop/space.hpp"
#include "fintop/sweep.hpp"

namespace fintop {

enum class CatalogMode { labeled, up_to_homeomorphism };

inline std::string to_string(CatalogMode m) {
    return m == CatalogMode::labeled ? "labeled" : "homeo";
}

inline std::optional<CatalogMode> parse_catalog_mode(const std::string& s) {
    if (s == "labeled") return CatalogMode::labeled;
    if (s == "homeo") return CatalogMode::up_to_homeomorphism;
    return std::nullopt;
}

inline constexpr int kMaxEnumerationGroundSize = 7;

namespace detail {

/// Depth-first assignment of minimal-neighbourhood rows for one fixed first
/// row. Calls emit(opens) with the ascending open-set list of each topology.
template <class Emit>
void enumerate_with_first_row(int n, std::uint32_t first_row, Emit&& emit) {
    const std::uint32_t full = full_bits(n);
    std::vector<std::uint32_t> rows(static_cast<std::size_t>(n), 0);
    rows[0] = first_row;

    std::vector<std::uint32_t> unions(std::size_t{1} << n);
    std::vector<std::uint8_t> seen(std::size_t{1} << n);
    std::vector<std::uint16_t> opens;
    opens.reserve(std::size_t{1} << n);

    auto emit_current = [&]() {
        // Opens are the unions of row sets; build them over subset DP.
        unions[0] = 0;
        std::fill(seen.begin(), seen.end(), 0);
        seen[0] = 1;
        opens.clear();
        opens.push_back(0);
        for (std::uint32_t t = 1; t <= full; ++t) {
            const std::uint32_t u = unions[t & (t - 1)] | rows[static_cast<std::size_t>(std::countr_zero(t))];
            unions[t] = u;
            if (!seen[u]) {
                seen[u] = 1;
                opens.push_back(static_cast<std::uint16_t>(u));
            }
        }
        std::sort(opens.begin(), opens.end());
        emit(std::span<const std::uint16_t>(opens));
    };

    // Iterative depth-first search over rows 1..n-1.
    int depth = 1;
    std::vector<std::uint32_t> cursor(static_cast<std::size_t>(n), 0);
    if (n == 1) {
        emit_current();
        return;
    }
    cursor[1] = 0;
    while (depth >= 1) {
        const int x = depth;
        bool advanced = false;
        // Candidate rows for point x contain bit x; scan ascending.
        for (std::uint32_t m = cursor[static_cast<std::size_t>(x)]; m <= full; ++m) {
            if (!((m >> x) & 1u)) continue;
            bool ok = true;
            for (int y = 0; y < x; ++y) {
                const std::uint32_t uy = rows[static_cast<std::size_t>(y)];
                if (((m >> y) & 1u) && !bits_subset(uy, m)) { ok = false; break; }
                if (((uy >> x) & 1u) && !bits_subset(m, uy)) { ok = false; break; }
            }
            if (!ok) continue;
            rows[static_cast<std::size_t>(x)] = m;
            cursor[static_cast<std::size_t>(x)] = m + 1;
            advanced = true;
            break;
        }
        if (!advanced) {
            cursor[static_cast<std::size_t>(x)] = 0;
            --depth;
            continue;
        }
        if (depth == n - 1) {
            emit_current();
        } else {
            ++depth;
            cursor[static_cast<std::size_t>(depth)] = 0;
        }
    }
}

}  // namespace detail

/// Visit every labeled topology on n points. The order is deterministic:
/// ascending first row, then depth-first row order. Not sorted; callers that
/// need catalog order sort the collected lists.
template <class Emit>
void for_each_topology(int n, Emit&& emit) {
    if (n < 1 || n > kMaxEnumerationGroundSize)
        throw std::invalid_argument("enumeration supports 1..7 points");
    const std::uint32_t full = full_bits(n);
    for (std::uint32_t first = 1; first <= full; first += 2)  // rows for point 0 contain bit 0
        detail::enumerate_with_first_row(n, first, emit);
}

/// Streaming labeled count with optional parallelism over first-row
/// partitions. Deterministic for any worker count.
inline std::uint64_t count_topologies(int n, unsigned workers = 1,
                                      const SweepDeadline& deadline = {}) {
    if (n < 1 || n > kMaxEnumerationGroundSize)
        throw std::invalid_argument("enumeration supports 1..7 points");
    const std::uint32_t full = full_bits(n);
    std::vector<std::uint32_t> firsts;
    for (std::uint32_t m = 1; m <= full; m += 2) firsts.push_back(m);

    std::vector<std::uint64_t> counts(firsts.size(), 0);
    std::atomic<std::size_t> next{0};
    std::atomic<bool> expired{false};
    auto body = [&]() {
        for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= firsts.size() || expired.load()) return;
            if (deadline_passed(deadline)) { expired.store(true); return; }
            std::uint64_t local = 0;
            detail::enumerate_with_first_row(n, firsts[i], [&](std::span<const std::uint16_t>) { ++local; });
            counts[i] = local;
        }
    };
    if (workers <= 1) {
        body();
    } else {
        std::vector<std::thread> pool;
        for (unsigned i = 0; i < workers; ++i) pool.emplace_back(body);
        for (auto& t : pool) t.join();
    }
    if (expired.load()) throw BudgetExceededError();
    return std::accumulate(counts.begin(), counts.end(), std::uint64_t{0});
}

/// Bit-permutation tables for all n! relabelings of n points.
class PermutationContext {
public:
    explicit PermutationContext(int n) : n_(n) {
        std::vector<int> perm(static_cast<std::size_t>(n));
        std::iota(perm.begin(), perm.end(), 0);
        const std::uint32_t full = full_bits(n);
        do {
            std::vector<std::uint16_t> table(std::size_t{1} << n);
            for (std::uint32_t m = 0; m <= full; ++m) {
                std::uint32_t out = 0;
                for (std::uint32_t rest = m; rest != 0; rest &= rest - 1)
                    out |= (1u << perm[static_cast<std::size_t>(std::countr_zero(rest))]);
                table[m] = static_cast<std::uint16_t>(out);
            }
            remap_.push_back(std::move(table));
        } while (std::next_permutation(perm.begin(), perm.end()));
    }

    int ground_size() const { return n_; }
    std::size_t permutation_count() const { return remap_.size(); }

    /// Lexicographically least relabeled open-set list.
    std::vector<std::uint16_t> canonical(std::span<const std::uint16_t> opens) const {
        std::vector<std::uint16_t> best;
        std::vector<std::uint16_t> cur(opens.size());
        for (const auto& table : remap_) {
            for (std::size_t i = 0; i < opens.size(); ++i) cur[i] = table[opens[i]];
            std::sort(cur.begin(), cur.end());
            if (best.empty() || cur < best) best = cur;
        }
        return best;
    }

private:
    int n_;
    std::vector<std::vector<std::uint16_t>> remap_;
};

/// Canonical form of one space under relabeling.
inline std::vector<std::uint16_t> canonical_form(const FiniteSpace& s) {
    PermutationContext ctx(s.ground_size());
    return ctx.canonical(std::span<const std::uint16_t>(s.opens()));
}

struct TopologyCatalog {
    int n = 0;
    CatalogMode mode = CatalogMode::labeled;
    std::vector<FiniteSpace> entries;  ///< ascending by open-set list
};

// ---- disk cache ------------------------------------------------------------

inline constexpr int kCacheFormatVersion = 1;

namespace detail {

inline std::uint64_t fnv1a64(std::string_view data, std::uint64_t seed = 14695981039346656037ULL) {
    std::uint64_t h = seed;
    for (unsigned char c : data) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return h;
}

inline std::string hex_line(std::span<const std::uint16_t> opens) {
    std::string line;
    char buf[8];
    for (std::size_t i = 0; i < opens.size(); ++i) {
        if (i) line += ',';
        auto [p, ec] = std::to_chars(buf, buf + sizeof buf, opens[i], 16);
        line.append(buf, p);
    }
    return line;
}

inline std::optional<std::vector<std::uint16_t>> parse_hex_line(std::string_view line) {
    std::vector<std::uint16_t> out;
    std::size_t pos = 0;
    while (pos <= line.size()) {
        std::size_t comma = line.find(',', pos);
        std::string_view tok = line.substr(pos, comma == std::string_view::npos ? line.size() - pos : comma - pos);
        if (tok.empty()) return std::nullopt;
        std::uint32_t value = 0;
        auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value, 16);
        if (ec != std::errc{} || p != tok.data() + tok.size() || value > 0xFFFFu) return std::nullopt;
        out.push_back(static_cast<std::uint16_t>(value));
        if (comma == std::string_view::npos) break;
        pos = comma + 1;
    }
    return out;
}

}  // namespace detail

/// One file per (n, mode, format version): a header line, one hex-encoded
/// open-set list per line, and a checksum trailer. Any mismatch on load is
/// treated as a miss so the catalog is regenerated.
class TopologyCache {
public:
    explicit TopologyCache(std::filesystem::path dir) : dir_(std::move(dir)) {}

    const std::filesystem::path& directory() const { return dir_; }

    std::filesystem::path file_for(int n, CatalogMode mode) const {
        return dir_ / ("topologies-n" + std::to_string(n) + "-" + to_string(mode) + "-v" +
                       std::to_string(kCacheFormatVersion) + ".txt");
    }

    std::optional<std::vector<std::vector<std::uint16_t>>> load(int n, CatalogMode mode) const {
        std::ifstream in(file_for(n, mode));
        if (!in) return std::nullopt;
        std::string header;
        if (!std::getline(in, header)) return std::nullopt;
        const std::string expected_prefix = "fintop-catalog v" + std::to_string(kCacheFormatVersion) +
                                            " n=" + std::to_string(n) + " mode=" + to_string(mode) +
                                            " count=";
        if (header.rfind(expected_prefix, 0) != 0) return std::nullopt;
        std::uint64_t count = 0;
        {
            std::string_view rest = std::string_view(header).substr(expected_prefix.size());
            auto [p, ec] = std::from_chars(rest.data(), rest.data() + rest.size(), count);
            if (ec != std::errc{} || p != rest.data() + rest.size()) return std::nullopt;
        }
        std::uint64_t checksum = detail::fnv1a64(header + "\n");
        std::vector<std::vector<std::uint16_t>> entries;
        entries.reserve(count);
        std::string line;
        for (std::uint64_t i = 0; i < count; ++i) {
            if (!std::getline(in, line)) return std::nullopt;
            checksum = detail::fnv1a64(line + "\n", checksum);
            auto opens = detail::parse_hex_line(line);
            if (!opens) return std::nullopt;
            entries.push_back(std::move(*opens));
        }
        if (!std::getline(in, line)) return std::nullopt;
        char buf[32];
        auto [p, ec] = std::to_chars(buf, buf + sizeof buf, checksum, 16);
        if (line != "checksum=fnv1a:" + std::string(buf, p)) return std::nullopt;
        if (std::getline(in, line)) return std::nullopt;  // trailing garbage
        return entries;
    }

    void store(int n, CatalogMode mode, const std::vector<FiniteSpace>& entries) const {
        std::filesystem::create_directories(dir_);
        const std::filesystem::path target = file_for(n, mode);
        const std::filesystem::path tmp = target.string() + ".tmp";
        {
            std::ofstream out(tmp, std::ios::trunc);
            const std::string header = "fintop-catalog v" + std::to_string(kCacheFormatVersion) +
                                       " n=" + std::to_string(n) + " mode=" + to_string(mode) +
                                       " count=" + std::to_string(entries.size());
            std::uint64_t checksum = detail::fnv1a64(header + "\n");
            out << header << '\n';
            for (const FiniteSpace& s : entries) {
                const std::string line = detail::hex_line(std::span<const std::uint16_t>(s.opens()));
                checksum = detail::fnv1a64(line + "\n", checksum);
                out << line << '\n';
            }
            char buf[32];
            auto [p, ec] = std::to_chars(buf, buf + sizeof buf, checksum, 16);
            out << "checksum=fnv1a:" << std::string(buf, p) << '\n';
        }
        std::filesystem::rename(tmp, target);
    }

private:
    std::filesystem::path dir_;
};

struct EnumerationOptions {
    unsigned workers = 1;
    std::optional<std::chrono::milliseconds> time_limit;
    const TopologyCache* cache = nullptr;
};

/// Enumerate all topologies on n points, labeled or up to homeomorphism.
/// Catalog entries are in ascending open-set-list order regardless of worker
/// count. Throws BudgetExceededError when the time limit is hit.
inline TopologyCatalog enumerate_topologies(int n, CatalogMode mode,
                                            const EnumerationOptions& options = {}) {
    if (n < 1 || n > kMaxEnumerationGroundSize)
        throw std::invalid_argument("enumeration supports 1..7 points");

    TopologyCatalog catalog;
    catalog.n = n;
    catalog.mode = mode;

    auto build_entries = [&](const std::vector<std::vector<std::uint16_t>>& lists) {
        catalog.entries.reserve(lists.size());
        for (const auto& opens : lists) {
            TopologyResult r = validate_topology(n, std::span<const std::uint16_t>(opens));
            if (std::holds_alternative<TopologyError>(r))
                throw ValidationError("catalog entry failed validation: " +
                                      std::get<TopologyError>(r).message());
            catalog.entries.push_back(std::get<FiniteSpace>(std::move(r)));
        }
    };

    if (options.cache) {
        if (auto cached = options.cache->load(n, mode)) {
            build_entries(*cached);
            return catalog;
        }
    }

    SweepDeadline deadline;
    if (options.time_limit)
        deadline = std::chrono::steady_clock::now() + *options.time_limit;

    const std::uint32_t full = full_bits(n);
    std::vector<std::uint32_t> firsts;
    for (std::uint32_t m = 1; m <= full; m += 2) firsts.push_back(m);

    std::optional<PermutationContext> perms;
    if (mode == CatalogMode::up_to_homeomorphism) perms.emplace(n);

    std::vector<std::vector<std::vector<std::uint16_t>>> partials(firsts.size());
    std::atomic<std::size_t> next{0};
    std::atomic<bool> expired{false};
    auto body = [&]() {
        for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= firsts.size() || expired.load()) return;
            if (deadline_passed(deadline)) { expired.store(true); return; }
            auto& bucket = partials[i];
            detail::enumerate_with_first_row(n, firsts[i], [&](std::span<const std::uint16_t> opens) {
                if (perms) {
                    // Keep only orbit minima; the representative is the
                    // canonical form itself.
                    std::vector<std::uint16_t> canon = perms->canonical(opens);
                    if (!std::equal(canon.begin(), canon.end(), opens.begin(), opens.end())) return;
                    bucket.emplace_back(std::move(canon));
                } else {
                    bucket.emplace_back(opens.begin(), opens.end());
                }
            });
        }
    };
    if (options.workers <= 1) {
        body();
    } else {
        std::vector<std::thread> pool;
        for (unsigned i = 0; i < options.workers; ++i) pool.emplace_back(body);
        for (auto& t : pool) t.join();
    }
    if (expired.load()) throw BudgetExceededError();

    std::vector<std::vector<std::uint16_t>> lists;
    for (auto& bucket : partials)
        for (auto& opens : bucket) lists.emplace_back(std::move(opens));
    std::sort(lists.begin(), lists.end());

    build_entries(lists);
    if (options.cache) options.cache->store(n, mode, catalog.entries);
    return catalog;
}

// ---- maps ------------------------------------------------------------------

/// Number of total maps n_domain -> n_codomain points. Throws when the count
/// does not fit in 63 bits (never the case for enumeration-sized spaces).
inline std::uint64_t map_count(int domain_n, int codomain_n) {
    std::uint64_t count = 1;
    for (int i = 0; i < domain_n; ++i) {
        if (count > (std::uint64_t{1} << 62) / static_cast<std::uint64_t>(codomain_n))
            throw std::invalid_argument("map universe too large to index");
        count *= static_cast<std::uint64_t>(codomain_n);
    }
    return count;
}

/// Image array of the index-th map in lexicographic image-array order
/// (index 0 is the constant map to point 0).
inline std::vector<std::uint8_t> map_image_at(int domain_n, int codomain_n, std::uint64_t index) {
    std::vector<std::uint8_t> image(static_cast<std::size_t>(domain_n));
    for (int x = domain_n - 1; x >= 0; --x) {
        image[static_cast<std::size_t>(x)] = static_cast<std::uint8_t>(index % codomain_n);
        index /= static_cast<std::uint64_t>(codomain_n);
    }
    return image;
}

/// Lexicographic index of an image array; inverse of map_image_at.
inline std::uint64_t map_index_of(std::span<const std::uint8_t> image, int codomain_n) {
    std::uint64_t index = 0;
    for (std::uint8_t y : image) index = index * static_cast<std::uint64_t>(codomain_n) + y;
    return index;
}

/// Visit all image arrays domain_n -> codomain_n in lexicographic order.
template <class Fn>
void for_each_map_image(int domain_n, int codomain_n, Fn&& fn) {
    std::vector<std::uint8_t> image(static_cast<std::size_t>(domain_n), 0);
    for (;;) {
        fn(std::span<const std::uint8_t>(image));
        int x = domain_n - 1;
        while (x >= 0 && image[static_cast<std::size_t>(x)] == codomain_n - 1) {
            image[static_cast<std::size_t>(x)] = 0;
            --x;
        }
        if (x < 0) return;
        ++image[static_cast<std::size_t>(x)];
    }
}

inline PointMap map_at(const FiniteSpace& domain, const FiniteSpace& codomain, std::uint64_t index) {
    return PointMap(domain, codomain,
                    map_image_at(domain.ground_size(), codomain.ground_size(), index));
}

}  // namespace fintop
