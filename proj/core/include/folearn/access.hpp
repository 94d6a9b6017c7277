#pragma once

#include <atomic>
#include <cstdint>
#include <mutex>
#include <optional>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "folearn/structure.hpp"

namespace folearn {

struct QueryCounts {
    std::uint64_t relation_queries = 0;
    std::uint64_t neighbor_queries = 0;
    std::uint64_t neighbor_answer_size = 0;

    std::uint64_t total() const {
        return relation_queries + neighbor_queries + neighbor_answer_size;
    }
    friend QueryCounts operator-(QueryCounts a, QueryCounts b) {
        return {a.relation_queries - b.relation_queries,
                a.neighbor_queries - b.neighbor_queries,
                a.neighbor_answer_size - b.neighbor_answer_size};
    }
    friend bool operator==(const QueryCounts&, const QueryCounts&) = default;
};

/// Query-counted view of a structure. Answers are identical to direct
/// inspection of the backing structure; the counters are the cost model.
/// Counters are atomic; the touched-element log is mutex-protected so
/// concurrent readers aggregate exactly.
class LocalAccessOracle {
public:
    explicit LocalAccessOracle(const RelStructure& backing) : s_(&backing) {}

    const RelStructure& backing() const { return *s_; }

    /// Relation query: is the tuple in the relation?
    bool relation(std::size_t sym, const Tuple& t) const {
        relation_queries_.fetch_add(1, std::memory_order_relaxed);
        return s_->holds(sym, t);
    }

    /// Neighborhood query: Gaifman neighbors of u in canonical order.
    const std::vector<Elem>& neighbors(Elem u) const {
        if (u >= s_->size()) throw std::out_of_range("oracle: unknown element");
        const auto& ns = s_->neighbors(u);
        neighbor_queries_.fetch_add(1, std::memory_order_relaxed);
        neighbor_answer_size_.fetch_add(ns.size(), std::memory_order_relaxed);
        if (log_enabled_) {
            std::lock_guard<std::mutex> lk(log_mutex_);
            touched_.insert(ns.begin(), ns.end());
        }
        return ns;
    }

    QueryCounts counts() const {
        return {relation_queries_.load(std::memory_order_relaxed),
                neighbor_queries_.load(std::memory_order_relaxed),
                neighbor_answer_size_.load(std::memory_order_relaxed)};
    }

    /// Every element id the oracle ever returned from a neighbor query.
    void enable_log(bool on = true) { log_enabled_ = on; }
    std::vector<Elem> touched() const {
        std::lock_guard<std::mutex> lk(log_mutex_);
        return std::vector<Elem>(touched_.begin(), touched_.end());
    }
    void clear_log() {
        std::lock_guard<std::mutex> lk(log_mutex_);
        touched_.clear();
    }

private:
    const RelStructure* s_;
    mutable std::atomic<std::uint64_t> relation_queries_{0};
    mutable std::atomic<std::uint64_t> neighbor_queries_{0};
    mutable std::atomic<std::uint64_t> neighbor_answer_size_{0};
    bool log_enabled_ = false;
    mutable std::mutex log_mutex_;
    mutable std::unordered_set<Elem> touched_;
};

/// Gaifman neighbors through the oracle (one neighbor query).
inline std::vector<Elem> gaifman_neighbors(const LocalAccessOracle& oracle, Elem u) {
    return oracle.neighbors(u);
}

/// Induced substructure on N_r(center) together with the distance map and
/// the view <-> backing element correspondence.
struct Ball {
    Tuple center;                       // backing indices
    unsigned radius = 0;
    RelStructure view;                  // induced substructure, same id strings
    std::vector<Elem> view_to_backing;  // view index -> backing index
    std::unordered_map<Elem, Elem> backing_to_view;
    std::vector<unsigned> dist;         // per view index, distance from center set

    Elem to_view(Elem backing) const { return backing_to_view.at(backing); }
    Tuple to_view(const Tuple& backing) const {
        Tuple t;
        t.reserve(backing.size());
        for (Elem e : backing) t.push_back(backing_to_view.at(e));
        return t;
    }
};

/// BFS to depth r from the center tuple, via neighbor queries only; the
/// view's relations are collected from tuples incident to ball elements,
/// charged as one relation query per distinct candidate tuple inspected.
Ball ball(const LocalAccessOracle& oracle, const Tuple& center, unsigned radius);

/// Bounded-distance query: shortest Gaifman path length if <= cap, else
/// nullopt (the infinity marker). BFS is capped so the cost never depends
/// on |U|.
std::optional<unsigned> distance(const LocalAccessOracle& oracle, Elem u, Elem v, unsigned cap);

}  // namespace folearn
