#include "folearn/access.hpp"

#include <algorithm>
#include <deque>

namespace folearn {

Ball ball(const LocalAccessOracle& oracle, const Tuple& center, unsigned radius) {
    const RelStructure& s = oracle.backing();
    for (Elem e : center)
        if (e >= s.size()) throw std::out_of_range("ball: unknown element");

    // BFS layer by layer; every element at distance <= radius-1 is expanded
    // exactly once, so at most |N_{r-1}| + |center| neighbor queries.
    std::unordered_map<Elem, unsigned> dist;
    std::vector<Elem> frontier;
    for (Elem e : center)
        if (dist.emplace(e, 0).second) frontier.push_back(e);
    std::sort(frontier.begin(), frontier.end(),
              [&](Elem a, Elem b) { return s.canonical_less(a, b); });

    for (unsigned depth = 0; depth < radius && !frontier.empty(); ++depth) {
        std::vector<Elem> next;
        for (Elem u : frontier) {
            for (Elem v : oracle.neighbors(u)) {
                if (dist.emplace(v, depth + 1).second) next.push_back(v);
            }
        }
        std::sort(next.begin(), next.end(),
                  [&](Elem a, Elem b) { return s.canonical_less(a, b); });
        frontier = std::move(next);
    }

    std::vector<Elem> members;
    members.reserve(dist.size());
    for (const auto& [e, _] : dist) members.push_back(e);
    std::sort(members.begin(), members.end(),
              [&](Elem a, Elem b) { return s.canonical_less(a, b); });

    std::unordered_map<Elem, Elem> to_view;
    std::vector<std::string> names;
    names.reserve(members.size());
    for (Elem i = 0; i < members.size(); ++i) {
        to_view.emplace(members[i], i);
        names.push_back(s.id(members[i]));
    }

    // The view's relations come from tuples incident to ball elements.
    // Each distinct candidate tuple is confirmed through one relation
    // query, so the extraction cost shows up in the counters and depends
    // only on the local topology, never on |U|.
    std::vector<std::vector<Tuple>> rels(s.vocab().size());
    std::unordered_set<std::uint64_t> seen;
    for (Elem m : members) {
        for (const auto& [sym, ti] : s.incident(m)) {
            std::uint64_t tag = (static_cast<std::uint64_t>(sym) << 40) | ti;
            if (!seen.insert(tag).second) continue;
            const Tuple& t = s.tuples(sym)[ti];
            if (!oracle.relation(sym, t)) continue;
            bool inside = true;
            for (Elem e : t)
                if (!to_view.count(e)) { inside = false; break; }
            if (!inside) continue;
            Tuple mapped;
            mapped.reserve(t.size());
            for (Elem e : t) mapped.push_back(to_view.at(e));
            rels[sym].push_back(std::move(mapped));
        }
    }

    Ball b;
    b.center = center;
    b.radius = radius;
    b.view = RelStructure(s.vocab(), std::move(names), std::move(rels));
    b.view_to_backing = std::move(members);
    b.backing_to_view = std::move(to_view);
    b.dist.resize(b.view_to_backing.size());
    for (Elem i = 0; i < b.view_to_backing.size(); ++i)
        b.dist[i] = dist.at(b.view_to_backing[i]);
    return b;
}

std::optional<unsigned> distance(const LocalAccessOracle& oracle, Elem u, Elem v, unsigned cap) {
    const RelStructure& s = oracle.backing();
    if (u >= s.size() || v >= s.size()) throw std::out_of_range("distance: unknown element");
    if (u == v) return 0u;

    std::unordered_map<Elem, unsigned> dist;
    dist.emplace(u, 0);
    std::deque<Elem> queue{u};
    while (!queue.empty()) {
        Elem cur = queue.front();
        queue.pop_front();
        unsigned d = dist.at(cur);
        if (d >= cap) continue;
        for (Elem w : oracle.neighbors(cur)) {
            if (dist.emplace(w, d + 1).second) {
                if (w == v) return d + 1;
                queue.push_back(w);
            }
        }
    }
    return std::nullopt;
}

}  // namespace folearn
