#include "folearn/structure.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace folearn {

Vocabulary::Vocabulary(std::vector<std::pair<std::string, unsigned>> symbols) {
    std::sort(symbols.begin(), symbols.end());
    for (std::size_t i = 0; i < symbols.size(); ++i) {
        const auto& [name, arity] = symbols[i];
        if (name.empty()) throw std::invalid_argument("vocabulary: empty symbol name");
        if (arity < 1) throw std::invalid_argument("vocabulary: arity of " + name + " must be >= 1");
        if (i > 0 && name == symbols[i - 1].first)
            throw std::invalid_argument("vocabulary: duplicate symbol " + name);
        names_.push_back(name);
        arities_.push_back(arity);
    }
}

std::size_t Vocabulary::find(const std::string& name) const {
    auto it = std::lower_bound(names_.begin(), names_.end(), name);
    if (it == names_.end() || *it != name) return npos;
    return static_cast<std::size_t>(it - names_.begin());
}

RelStructure::RelStructure(Vocabulary vocab,
                           std::vector<std::string> universe,
                           std::vector<std::vector<Tuple>> relations)
    : vocab_(std::move(vocab)), ids_(std::move(universe)) {
    index_.reserve(ids_.size());
    for (Elem i = 0; i < ids_.size(); ++i) {
        if (!index_.emplace(ids_[i], i).second)
            throw std::invalid_argument("structure: duplicate element id " + ids_[i]);
    }

    canon_rank_.resize(ids_.size());
    {
        std::vector<Elem> order(ids_.size());
        std::iota(order.begin(), order.end(), 0u);
        std::sort(order.begin(), order.end(),
                  [&](Elem a, Elem b) { return ids_[a] < ids_[b]; });
        for (std::uint32_t r = 0; r < order.size(); ++r) canon_rank_[order[r]] = r;
    }

    if (relations.size() != vocab_.size())
        throw std::invalid_argument("structure: relation list count does not match vocabulary");

    rel_lists_.resize(vocab_.size());
    rel_sets_.resize(vocab_.size());
    for (std::size_t sym = 0; sym < vocab_.size(); ++sym) {
        const unsigned arity = vocab_.arity(sym);
        for (const Tuple& t : relations[sym]) {
            if (t.size() != arity)
                throw std::invalid_argument("structure: arity mismatch in relation " + vocab_.name(sym));
            for (Elem e : t)
                if (e >= ids_.size())
                    throw std::invalid_argument("structure: tuple component out of universe in " +
                                                vocab_.name(sym));
            if (rel_sets_[sym].insert(t).second) rel_lists_[sym].push_back(t);
        }
        std::sort(rel_lists_[sym].begin(), rel_lists_[sym].end());
    }

    // Gaifman adjacency and incident-tuple lists.
    std::vector<std::unordered_set<Elem>> adj_sets(ids_.size());
    incident_.resize(ids_.size());
    for (std::uint32_t sym = 0; sym < rel_lists_.size(); ++sym) {
        for (std::uint32_t ti = 0; ti < rel_lists_[sym].size(); ++ti) {
            const Tuple& t = rel_lists_[sym][ti];
            std::unordered_set<Elem> members(t.begin(), t.end());
            for (Elem e : members) {
                incident_[e].emplace_back(sym, ti);
                for (Elem f : members)
                    if (f != e) adj_sets[e].insert(f);
            }
        }
    }
    adj_.resize(ids_.size());
    for (Elem e = 0; e < ids_.size(); ++e) {
        adj_[e].assign(adj_sets[e].begin(), adj_sets[e].end());
        std::sort(adj_[e].begin(), adj_[e].end(),
                  [&](Elem a, Elem b) { return canon_rank_[a] < canon_rank_[b]; });
    }
}

Elem RelStructure::elem(const std::string& id) const {
    auto it = index_.find(id);
    if (it == index_.end()) throw std::out_of_range("unknown element id: " + id);
    return it->second;
}

Tuple RelStructure::tuple_of_ids(const std::vector<std::string>& names) const {
    Tuple t;
    t.reserve(names.size());
    for (const auto& n : names) t.push_back(elem(n));
    return t;
}

std::vector<std::string> RelStructure::ids_of_tuple(const Tuple& t) const {
    std::vector<std::string> out;
    out.reserve(t.size());
    for (Elem e : t) out.push_back(id(e));
    return out;
}

RelStructure induced(const RelStructure& s, const std::vector<Elem>& universe) {
    std::unordered_set<Elem> keep;
    std::vector<std::string> names;
    names.reserve(universe.size());
    for (Elem e : universe) {
        if (e >= s.size()) throw std::out_of_range("induced: element out of universe");
        if (keep.insert(e).second) names.push_back(s.id(e));
    }
    std::unordered_map<std::string, Elem> new_index;
    for (Elem i = 0; i < names.size(); ++i) new_index.emplace(names[i], i);

    std::vector<std::vector<Tuple>> rels(s.vocab().size());
    for (std::size_t sym = 0; sym < s.vocab().size(); ++sym) {
        for (const Tuple& t : s.tuples(sym)) {
            bool inside = true;
            for (Elem e : t)
                if (!keep.count(e)) { inside = false; break; }
            if (!inside) continue;
            Tuple mapped;
            mapped.reserve(t.size());
            for (Elem e : t) mapped.push_back(new_index.at(s.id(e)));
            rels[sym].push_back(std::move(mapped));
        }
    }
    return RelStructure(s.vocab(), std::move(names), std::move(rels));
}

RelStructure disjoint_union(const RelStructure& a, const RelStructure& b) {
    if (!(a.vocab() == b.vocab()))
        throw std::invalid_argument("disjoint_union: vocabulary mismatch");
    std::vector<std::string> names = a.ids();
    for (const auto& id : b.ids()) {
        if (a.has_id(id))
            throw std::invalid_argument("disjoint_union: universes share element " + id);
        names.push_back(id);
    }
    const Elem offset = static_cast<Elem>(a.size());
    std::vector<std::vector<Tuple>> rels(a.vocab().size());
    for (std::size_t sym = 0; sym < a.vocab().size(); ++sym) {
        rels[sym] = a.tuples(sym);
        for (Tuple t : b.tuples(sym)) {
            for (Elem& e : t) e += offset;
            rels[sym].push_back(std::move(t));
        }
    }
    return RelStructure(a.vocab(), std::move(names), std::move(rels));
}

unsigned max_degree(const RelStructure& s) {
    unsigned d = 0;
    for (Elem e = 0; e < s.size(); ++e) d = std::max(d, s.degree(e));
    return d;
}

}  // namespace folearn
