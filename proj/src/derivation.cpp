#include "flatsurf/derivation.hpp"

#include <algorithm>
#include <tuple>

namespace flatsurf {

std::vector<EdgeClass> classify_edges(const Surface& s) {
    std::vector<EdgeClass> out;
    for (int l = 1; l <= s.label_count; ++l) {
        EdgeClass c;
        c.label = l;
        bool horizontal = true;
        for (int i = 0; i < 2; ++i) {
            EdgeRef e = s.label_edges[l - 1][i];
            const PolygonBands& b = s.bands[e.poly];
            c.occ[i].poly = e.poly;
            c.occ[i].edge = e.edge;
            c.occ[i].side = b.edge_side[e.edge];
            if (c.occ[i].side == EdgeSide::Left || c.occ[i].side == EdgeSide::Right) {
                c.occ[i].level = b.edge_band[e.edge];
                horizontal = false;
            } else {
                c.occ[i].level = (c.occ[i].side == EdgeSide::Bottom) ? 0 : b.band_count();
            }
        }
        c.kind = horizontal ? EdgeKind::Horizontal : EdgeKind::Gluing;
        out.push_back(c);
    }
    return out;
}

bool label_is_horizontal(const Surface& s, int label) {
    return s.edge_is_horizontal(s.label_edges[label - 1][0]);
}

std::string Word3::case_name() const {
    std::string c = "(";
    c += static_cast<char>('0' + types[0]);
    c += static_cast<char>('0' + types[1]);
    c += ")";
    return c;
}

int DerivationContext::transition_type(int e_in, int e_out) const {
    const auto* a = diagram_.find(e_in, e_out);
    if (!a) throw InadmissiblePair("no admissible transition between the labels");
    return a->type;
}

CuttingSequence DerivationContext::derive_combinatorial(const CuttingSequence& c) const {
    if (c.window_len() < 3)
        throw Inadmissible("derivation needs a window of at least three letters");
    int n = c.window_len();
    std::vector<int> types(n - 1);
    for (int i = 0; i + 1 < n; ++i) types[i] = transition_type(c.labels[i], c.labels[i + 1]);

    CuttingSequence out;
    for (int i = 1; i + 1 < n; ++i) {
        bool keep = label_is_horizontal(*s_, c.labels[i]) || types[i - 1] == types[i];
        if (!keep) continue;
        out.labels.push_back(c.labels[i]);
        if (!c.crossings.empty()) out.crossings.push_back(c.crossings[i]);
    }
    return out;
}

std::vector<Word3> DerivationContext::enumerate_words() const {
    std::vector<Word3> words;
    for (const auto& a : diagram_.arrows) {
        for (const auto& b : diagram_.arrows) {
            if (a.to != b.from) continue;
            Word3 w;
            w.labels[0] = a.from;
            w.labels[1] = a.to;
            w.labels[2] = b.to;
            w.types[0] = a.type;
            w.types[1] = b.type;
            w.middle_horizontal = label_is_horizontal(*s_, w.labels[1]);
            w.kept = w.middle_horizontal || w.types[0] == w.types[1];
            words.push_back(w);
        }
    }
    std::sort(words.begin(), words.end(), [](const Word3& x, const Word3& y) {
        return std::tuple(x.labels[1], x.labels[0], x.labels[2]) <
               std::tuple(y.labels[1], y.labels[0], y.labels[2]);
    });
    return words;
}

int transition_type(const Surface& s, int e_in, int e_out) {
    return DerivationContext(s).transition_type(e_in, e_out);
}

CuttingSequence derive_combinatorial(const Surface& s, const CuttingSequence& c) {
    return DerivationContext(s).derive_combinatorial(c);
}

std::vector<Word3> enumerate_words(const Surface& s) {
    return DerivationContext(s).enumerate_words();
}

CuttingSequence sandwich_derive(const Surface& s, const CuttingSequence& c) {
    if (s.family != FamilyTag::RegularSingle && s.family != FamilyTag::RegularDouble)
        throw WrongFamily("sandwich rule applies to regular polygon surfaces only");
    CuttingSequence out;
    for (int i = 1; i + 1 < c.window_len(); ++i) {
        if (c.labels[i - 1] != c.labels[i + 1]) continue;
        out.labels.push_back(c.labels[i]);
        if (!c.crossings.empty()) out.crossings.push_back(c.crossings[i]);
    }
    return out;
}

}  // namespace flatsurf
