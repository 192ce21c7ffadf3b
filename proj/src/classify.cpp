// Copyright 2026 The turbolab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "turbolab/classify.hpp"

#include <algorithm>
#include <climits>
#include <deque>
#include <functional>
#include <memory>
#include <queue>
#include <sstream>
#include <stdexcept>

namespace turbolab {

namespace {

constexpr std::uint32_t kNone = UINT32_MAX;

// Reverse adjacency in CSR form; entries are (source state, choice).
struct ReverseEdges {
    std::vector<std::size_t> offset;
    std::vector<std::uint32_t> source;
    std::vector<std::uint32_t> choice;
};

ReverseEdges reverse_edges(const TransitionGraph& g, bool zero_only) {
    ReverseEdges r;
    r.offset.assign(g.state_count() + 1, 0);
    for (std::uint32_t s = 0; s < g.state_count(); ++s) {
        for (std::size_t j = 0; j < g.degree(); ++j) {
            if (!zero_only || g.weight(s, j) == 0) {
                ++r.offset[g.target(s, j) + 1];
            }
        }
    }
    for (std::size_t i = 1; i < r.offset.size(); ++i) {
        r.offset[i] += r.offset[i - 1];
    }
    r.source.resize(r.offset.back());
    r.choice.resize(r.offset.back());
    std::vector<std::size_t> fill(r.offset.begin(), r.offset.end() - 1);
    for (std::uint32_t s = 0; s < g.state_count(); ++s) {
        for (std::size_t j = 0; j < g.degree(); ++j) {
            if (!zero_only || g.weight(s, j) == 0) {
                const std::size_t at = fill[g.target(s, j)]++;
                r.source[at] = s;
                r.choice[at] = static_cast<std::uint32_t>(j);
            }
        }
    }
    return r;
}

Letters state_letters(const TransitionGraph& g, std::uint32_t state) {
    return unpack_letters(state, static_cast<std::size_t>(g.seed().m()), g.seed().space().bits());
}

Letters stab_letters(const TransitionGraph& g, std::size_t choice) {
    return unpack_letters(g.table().stab_choice(choice), static_cast<std::size_t>(g.seed().s()),
                          g.seed().space().bits());
}

}  // namespace

TransitionGraph::TransitionGraph(const SeedMorphism& seed)
    : seed_(seed), table_(seed_), states_(table_.state_count()), degree_(table_.stab_count()) {
    const std::size_t edges = static_cast<std::size_t>(states_) * degree_;
    if (edges > (std::size_t{1} << 26)) {
        throw std::length_error("transition graph too large");
    }
    targets_.resize(edges);
    weights_.resize(edges);
    for (std::uint32_t s = 0; s < states_; ++s) {
        for (std::size_t j = 0; j < degree_; ++j) {
            const std::uint64_t out = table_.step(s, 0, j);
            targets_[static_cast<std::size_t>(s) * degree_ + j] = table_.next_state(out);
            weights_[static_cast<std::size_t>(s) * degree_ + j] = static_cast<std::uint16_t>(table_.physical_weight(out));
        }
    }
}

std::vector<std::uint8_t> reachable_I(const TransitionGraph& graph) {
    std::vector<std::uint8_t> seen(graph.state_count(), 0);
    std::vector<std::uint32_t> stack{0};
    seen[0] = 1;
    while (!stack.empty()) {
        const std::uint32_t s = stack.back();
        stack.pop_back();
        for (std::size_t j = 0; j < graph.degree(); ++j) {
            const std::uint32_t t = graph.target(s, j);
            if (!seen[t]) {
                seen[t] = 1;
                stack.push_back(t);
            }
        }
    }
    return seen;
}

MemoryPartition classify_memories(const TransitionGraph& graph) {
    const std::uint32_t n = graph.state_count();
    MemoryPartition out;
    out.good.assign(n, 1);

    // Prune states without a weight-0 edge into the surviving set.
    std::vector<std::uint32_t> zero_out(n, 0);
    for (std::uint32_t s = 0; s < n; ++s) {
        for (std::size_t j = 0; j < graph.degree(); ++j) {
            zero_out[s] += graph.weight(s, j) == 0 ? 1 : 0;
        }
    }
    const ReverseEdges zero_rev = reverse_edges(graph, true);
    std::vector<std::uint32_t> queue;
    for (std::uint32_t s = 0; s < n; ++s) {
        if (zero_out[s] == 0) {
            out.good[s] = 0;
            queue.push_back(s);
        }
    }
    while (!queue.empty()) {
        const std::uint32_t t = queue.back();
        queue.pop_back();
        for (std::size_t e = zero_rev.offset[t]; e < zero_rev.offset[t + 1]; ++e) {
            const std::uint32_t s = zero_rev.source[e];
            if (out.good[s] && --zero_out[s] == 0) {
                out.good[s] = 0;
                queue.push_back(s);
            }
        }
    }

    // M0: everything with a path into good.
    const ReverseEdges rev = reverse_edges(graph, false);
    out.in_m1.assign(n, 1);
    for (std::uint32_t s = 0; s < n; ++s) {
        if (out.good[s]) {
            out.in_m1[s] = 0;
            queue.push_back(s);
        }
    }
    while (!queue.empty()) {
        const std::uint32_t t = queue.back();
        queue.pop_back();
        for (std::size_t e = rev.offset[t]; e < rev.offset[t + 1]; ++e) {
            const std::uint32_t s = rev.source[e];
            if (out.in_m1[s]) {
                out.in_m1[s] = 0;
                queue.push_back(s);
            }
        }
    }
    return out;
}

std::optional<SpeedWitness> speed(const TransitionGraph& graph, const MemoryPartition& partition) {
    const std::uint32_t n = graph.state_count();
    // Weight-0 edges out of M1 stay in M1 and form a DAG there. longest[s] is
    // the number of edges on the longest weight-0 walk from s.
    std::vector<int> longest(n, -1);
    std::vector<std::uint32_t> pending(n, 0);
    const ReverseEdges zero_rev = reverse_edges(graph, true);
    std::vector<std::uint32_t> ready;
    bool any = false;
    for (std::uint32_t s = 0; s < n; ++s) {
        if (!partition.in_m1[s]) {
            continue;
        }
        any = true;
        for (std::size_t j = 0; j < graph.degree(); ++j) {
            pending[s] += graph.weight(s, j) == 0 ? 1 : 0;
        }
        if (pending[s] == 0) {
            longest[s] = 0;
            ready.push_back(s);
        }
    }
    if (!any) {
        return std::nullopt;
    }
    while (!ready.empty()) {
        const std::uint32_t t = ready.back();
        ready.pop_back();
        for (std::size_t e = zero_rev.offset[t]; e < zero_rev.offset[t + 1]; ++e) {
            const std::uint32_t s = zero_rev.source[e];
            if (!partition.in_m1[s]) {
                continue;
            }
            longest[s] = std::max(longest[s], longest[t] + 1);
            if (--pending[s] == 0) {
                ready.push_back(s);
            }
        }
    }
    SpeedWitness w;
    int best = -1;
    for (std::uint32_t s = 0; s < n; ++s) {
        if (partition.in_m1[s]) {
            if (longest[s] < 0) {
                throw std::logic_error("weight-0 cycle inside M1");
            }
            if (longest[s] > best) {
                best = longest[s];
                w.start = s;
            }
        }
    }
    w.eta = best + 1;
    std::uint32_t cur = w.start;
    for (int step = 0; step < best; ++step) {
        for (std::size_t j = 0; j < graph.degree(); ++j) {
            const std::uint32_t t = graph.target(cur, j);
            if (graph.weight(cur, j) == 0 && partition.in_m1[t] && longest[t] == longest[cur] - 1) {
                w.choices.push_back(j);
                cur = t;
                break;
            }
        }
    }
    return w;
}

std::size_t MemoryClassification::count_i() const {
    return static_cast<std::size_t>(std::count(in_i.begin(), in_i.end(), std::uint8_t{1}));
}

std::size_t MemoryClassification::count_m1() const {
    return static_cast<std::size_t>(std::count(in_m1.begin(), in_m1.end(), std::uint8_t{1}));
}

std::size_t MemoryClassification::count_m0() const { return in_m1.size() - count_m1(); }

MemoryClassification classify(const TransitionGraph& graph) {
    MemoryClassification out;
    out.in_i = reachable_I(graph);
    MemoryPartition part = classify_memories(graph);
    out.speed = speed(graph, part);
    out.in_m1 = std::move(part.in_m1);
    out.good = std::move(part.good);
    return out;
}

MemoryClassification classify(const SeedMorphism& seed) { return classify(TransitionGraph(seed)); }

RecursionVerdict is_recursive(const TransitionGraph& graph, const MemoryClassification& classification) {
    const SeedMorphism& seed = graph.seed();
    const StepTable& table = graph.table();
    const int b = seed.space().bits();
    const std::uint32_t n = graph.state_count();
    RecursionVerdict verdict;
    verdict.recursive = true;

    // Impulses: one nonzero letter at one information slot.
    for (std::uint32_t m = 0; m < n && verdict.recursive; ++m) {
        if (!classification.in_i[m]) {
            continue;
        }
        for (int slot = 0; slot < seed.k() && verdict.recursive; ++slot) {
            for (Letter x = 1; x < seed.space().size() && verdict.recursive; ++x) {
                const std::uint64_t info = static_cast<std::uint64_t>(x) << (slot * b);
                const std::uint64_t img = table.info_image(info);
                for (std::size_t j = 0; j < table.stab_count(); ++j) {
                    const std::uint64_t out = table.step(m, img, j);
                    const std::uint32_t next = table.next_state(out);
                    if (classification.in_m1[next]) {
                        continue;
                    }
                    verdict.recursive = false;
                    RecursionWitness w;
                    w.memory = state_letters(graph, m);
                    w.impulse = unpack_letters(info, static_cast<std::size_t>(seed.k()), b);
                    w.impulse_stab = stab_letters(graph, j);
                    w.finite_weight = table.physical_weight(out);

                    // Prefix: breadth-first path from the zero memory to m.
                    std::vector<std::uint32_t> parent(n, kNone);
                    std::vector<std::uint32_t> via(n, 0);
                    std::deque<std::uint32_t> bfs{0};
                    parent[0] = 0;
                    while (!bfs.empty() && parent[m] == kNone) {
                        const std::uint32_t s = bfs.front();
                        bfs.pop_front();
                        for (std::size_t c = 0; c < graph.degree(); ++c) {
                            const std::uint32_t t = graph.target(s, c);
                            if (parent[t] == kNone) {
                                parent[t] = s;
                                via[t] = static_cast<std::uint32_t>(c);
                                bfs.push_back(t);
                            }
                        }
                    }
                    for (std::uint32_t s = m; s != 0; s = parent[s]) {
                        w.prefix.push_back(stab_letters(graph, via[s]));
                    }
                    std::reverse(w.prefix.begin(), w.prefix.end());

                    // Tail: cheapest path to a good state (reverse Dijkstra).
                    std::vector<int> dist(n, INT_MAX);
                    std::vector<std::uint32_t> hop(n, 0);
                    using Item = std::pair<int, std::uint32_t>;
                    std::priority_queue<Item, std::vector<Item>, std::greater<>> heap;
                    for (std::uint32_t s = 0; s < n; ++s) {
                        if (classification.good[s]) {
                            dist[s] = 0;
                            heap.emplace(0, s);
                        }
                    }
                    const ReverseEdges rev = reverse_edges(graph, false);
                    while (!heap.empty()) {
                        const auto [d, t] = heap.top();
                        heap.pop();
                        if (d != dist[t]) {
                            continue;
                        }
                        for (std::size_t e = rev.offset[t]; e < rev.offset[t + 1]; ++e) {
                            const std::uint32_t s = rev.source[e];
                            const int nd = d + graph.weight(s, rev.choice[e]);
                            if (nd < dist[s]) {
                                dist[s] = nd;
                                hop[s] = rev.choice[e];
                                heap.emplace(nd, s);
                            }
                        }
                    }
                    for (std::uint32_t s = next; !classification.good[s];) {
                        w.tail.push_back(stab_letters(graph, hop[s]));
                        w.finite_weight += graph.weight(s, hop[s]);
                        s = graph.target(s, hop[s]);
                    }
                    verdict.witness = std::move(w);
                    break;
                }
            }
        }
    }
    return verdict;
}

RecursionVerdict is_recursive(const SeedMorphism& seed) {
    const TransitionGraph graph(seed);
    return is_recursive(graph, classify(graph));
}

RecursionVerdict is_totally_recursive(const SeedMorphism& encoder) {
    return is_recursive(truncated_decoder(encoder));
}

std::string to_string(SystematicVerdict verdict) {
    switch (verdict) {
        case SystematicVerdict::structural_pass: return "structural_pass";
        case SystematicVerdict::falsified: return "falsified";
        case SystematicVerdict::undecided: return "undecided";
    }
    return "undecided";
}

namespace {

// Output letter r depends on input letters only through an invertible b x b
// block from information letter j.
std::vector<int> structural_systematic(const SeedMorphism& seed) {
    const int b = seed.space().bits();
    const BitMatrix& a = seed.matrix();
    const std::uint64_t letter_mask = (std::uint64_t{1} << b) - 1;
    std::vector<int> map(static_cast<std::size_t>(seed.k()), -1);
    for (int j = 0; j < seed.k(); ++j) {
        const int col = (seed.m() + j) * b;
        const std::uint64_t own = letter_mask << col;
        for (int r = 0; r < seed.n() && map[static_cast<std::size_t>(j)] < 0; ++r) {
            BitMatrix block(static_cast<std::size_t>(b), static_cast<std::size_t>(b));
            bool clean = true;
            for (int t = 0; t < b; ++t) {
                const std::uint64_t row = a.row(static_cast<std::size_t>(r * b + t));
                if ((row & ~own) != 0) {
                    clean = false;
                    break;
                }
                block.set_row(static_cast<std::size_t>(t), (row >> col) & letter_mask);
            }
            if (clean && block.is_invertible()) {
                map[static_cast<std::size_t>(j)] = r;
            }
        }
        if (map[static_cast<std::size_t>(j)] < 0) {
            return {};
        }
    }
    return map;
}

}  // namespace

SystematicReport is_systematic(const SeedMorphism& encoder, int n_falsify) {
    if (encoder.kind() != MorphismKind::encoder) {
        throw std::invalid_argument("is_systematic requires an encoder");
    }
    SystematicReport report;
    report.info_to_output = structural_systematic(encoder);
    if (!report.info_to_output.empty() || encoder.k() == 0) {
        report.verdict = SystematicVerdict::structural_pass;
        return report;
    }
    report.info_to_output.clear();

    const int b = encoder.space().bits();
    const std::size_t infos = std::size_t{1} << (b * encoder.k());
    std::unique_ptr<StepTable> table;
    try {
        table = std::make_unique<StepTable>(encoder, StepTable::Stabilizers::all);
    } catch (const std::length_error&) {
        return report;
    }
    const std::uint32_t n = table->state_count();
    if (static_cast<double>(n) * static_cast<double>(infos) * static_cast<double>(table->stab_count()) > 1e8) {
        return report;
    }

    // value[s] = min over inputs reaching s of sum |P_i| - |E|_L.
    struct Back {
        std::uint32_t prev;
        std::uint32_t info;
        std::uint32_t stab;
    };
    constexpr int kInf = INT_MAX / 2;
    std::vector<int> cur(n, 0);
    std::vector<std::vector<Back>> trail;
    std::vector<std::uint32_t> origin(n);
    for (std::uint32_t s = 0; s < n; ++s) {
        origin[s] = s;
    }
    std::vector<std::uint64_t> info_images(infos);
    std::vector<int> info_weights(infos);
    for (std::size_t x = 0; x < infos; ++x) {
        info_images[x] = table->info_image(x);
        info_weights[x] = table->info_weight(x);
    }
    for (int step = 1; step <= n_falsify; ++step) {
        std::vector<int> next(n, kInf);
        std::vector<Back> back(n, Back{kNone, 0, 0});
        for (std::uint32_t s = 0; s < n; ++s) {
            for (std::size_t x = 0; x < infos; ++x) {
                for (std::size_t j = 0; j < table->stab_count(); ++j) {
                    const std::uint64_t out = table->step(s, info_images[x], j);
                    const int v = cur[s] + table->physical_weight(out) - info_weights[x];
                    const std::uint32_t t = table->next_state(out);
                    if (v < next[t]) {
                        next[t] = v;
                        back[t] = Back{s, static_cast<std::uint32_t>(x), static_cast<std::uint32_t>(j)};
                    }
                }
            }
        }
        trail.push_back(std::move(back));
        cur.swap(next);
        std::uint32_t worst = kNone;
        int deficit = 0;
        for (std::uint32_t s = 0; s < n; ++s) {
            const int total = cur[s] + table->memory_weight(s);
            if (total < deficit) {
                deficit = total;
                worst = s;
            }
        }
        if (worst != kNone) {
            ConvInput witness;
            witness.info.resize(static_cast<std::size_t>(step));
            witness.stab.resize(static_cast<std::size_t>(step));
            std::uint32_t s = worst;
            for (int i = step - 1; i >= 0; --i) {
                const Back& bk = trail[static_cast<std::size_t>(i)][s];
                witness.info[static_cast<std::size_t>(i)] =
                    unpack_letters(bk.info, static_cast<std::size_t>(encoder.k()), b);
                witness.stab[static_cast<std::size_t>(i)] =
                    unpack_letters(table->stab_choice(bk.stab), static_cast<std::size_t>(encoder.s()), b);
                s = bk.prev;
            }
            witness.memory = unpack_letters(s, static_cast<std::size_t>(encoder.m()), b);
            report.verdict = SystematicVerdict::falsified;
            report.witness = std::move(witness);
            report.witness_deficit = -deficit;
            return report;
        }
    }
    return report;
}

std::string to_dot(const TransitionGraph& graph, const MemoryClassification& classification) {
    const LetterSpace& space = graph.seed().space();
    std::ostringstream out;
    out << "digraph memory {\n";
    for (std::uint32_t s = 0; s < graph.state_count(); ++s) {
        const std::string name = space.format_word(state_letters(graph, s));
        out << "  s" << s << " [label=\"" << (name.empty() ? "-" : name) << "\" shape="
            << (classification.in_m1[s] ? "box" : "ellipse") << (classification.in_i[s] ? " style=bold" : "")
            << "];\n";
    }
    for (std::uint32_t s = 0; s < graph.state_count(); ++s) {
        for (std::size_t j = 0; j < graph.degree(); ++j) {
            out << "  s" << s << " -> s" << graph.target(s, j) << " [label=\"" << graph.weight(s, j) << "\"];\n";
        }
    }
    out << "}\n";
    return out.str();
}

}  // namespace turbolab
