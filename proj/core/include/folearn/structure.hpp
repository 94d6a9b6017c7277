#pragma once

#include <cstdint>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

namespace folearn {

/// Element of a structure's universe, as an index into RelStructure::ids().
/// The id strings are the external names; all tie-breaking "canonical order"
/// is lexicographic on the id string, not on the index.
using Elem = std::uint32_t;
using Tuple = std::vector<Elem>;

struct TupleHash {
    std::size_t operator()(const Tuple& t) const {
        std::size_t seed = t.size();
        for (Elem e : t) seed ^= e + 0x9e3779b9 + (seed << 6) + (seed >> 2);
        return seed;
    }
};

/// Finite relational vocabulary. Symbols are kept sorted by name so that
/// symbol indices are canonical across runs and platforms.
class Vocabulary {
public:
    Vocabulary() = default;
    explicit Vocabulary(std::vector<std::pair<std::string, unsigned>> symbols);

    std::size_t size() const { return names_.size(); }
    const std::string& name(std::size_t sym) const { return names_[sym]; }
    unsigned arity(std::size_t sym) const { return arities_[sym]; }
    /// Index of a symbol name, or npos.
    std::size_t find(const std::string& name) const;
    static constexpr std::size_t npos = static_cast<std::size_t>(-1);

    bool operator==(const Vocabulary& other) const {
        return names_ == other.names_ && arities_ == other.arities_;
    }

private:
    std::vector<std::string> names_;    // sorted lexicographically
    std::vector<unsigned> arities_;
};

/// A finite relational structure. Immutable after construction; the Gaifman
/// adjacency and per-element incident-tuple lists are built eagerly so that
/// neighbor answers are O(degree) lookups.
class RelStructure {
public:
    RelStructure() = default;

    /// Validates and builds. `universe` keeps document order; relation
    /// tuples are stored sorted (canonically) and deduplicated.
    RelStructure(Vocabulary vocab,
                 std::vector<std::string> universe,
                 std::vector<std::vector<Tuple>> relations);

    const Vocabulary& vocab() const { return vocab_; }
    std::size_t size() const { return ids_.size(); }
    const std::vector<std::string>& ids() const { return ids_; }
    const std::string& id(Elem e) const { return ids_[e]; }
    /// Index of an element id; throws std::out_of_range for unknown ids.
    Elem elem(const std::string& id) const;
    bool has_id(const std::string& id) const { return index_.count(id) != 0; }

    /// Rank of an element in the lexicographic order of ids; defines the
    /// canonical total order used for all tie-breaking.
    std::uint32_t canonical_rank(Elem e) const { return canon_rank_[e]; }
    bool canonical_less(Elem a, Elem b) const { return canon_rank_[a] < canon_rank_[b]; }

    bool holds(std::size_t sym, const Tuple& t) const {
        return rel_sets_[sym].count(t) != 0;
    }
    /// Relation tuples in canonical (sorted) order.
    const std::vector<Tuple>& tuples(std::size_t sym) const { return rel_lists_[sym]; }

    /// Gaifman neighbors of e, sorted in canonical order.
    const std::vector<Elem>& neighbors(Elem e) const { return adj_[e]; }
    unsigned degree(Elem e) const { return static_cast<unsigned>(adj_[e].size()); }

    /// (symbol, tuple index) pairs of relation tuples containing e.
    const std::vector<std::pair<std::uint32_t, std::uint32_t>>& incident(Elem e) const {
        return incident_[e];
    }

    Tuple tuple_of_ids(const std::vector<std::string>& names) const;
    std::vector<std::string> ids_of_tuple(const Tuple& t) const;

private:
    Vocabulary vocab_;
    std::vector<std::string> ids_;
    std::unordered_map<std::string, Elem> index_;
    std::vector<std::uint32_t> canon_rank_;
    std::vector<std::vector<Tuple>> rel_lists_;
    std::vector<std::unordered_set<Tuple, TupleHash>> rel_sets_;
    std::vector<std::vector<Elem>> adj_;
    std::vector<std::vector<std::pair<std::uint32_t, std::uint32_t>>> incident_;
};

/// Substructure induced on `universe` (a set of element indices of s).
RelStructure induced(const RelStructure& s, const std::vector<Elem>& universe);

/// Disjoint union; throws if vocabularies differ or ids overlap.
RelStructure disjoint_union(const RelStructure& a, const RelStructure& b);

/// Maximum Gaifman degree; 0 for empty or edgeless structures.
unsigned max_degree(const RelStructure& s);

}  // namespace folearn
