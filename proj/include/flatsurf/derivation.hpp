#pragma once

#include <string>
#include <vector>

#include "flatsurf/diagrams.hpp"
#include "flatsurf/flow.hpp"

namespace flatsurf {

enum class EdgeKind { Horizontal, Gluing };

struct EdgeClass {
    int label = 0;
    EdgeKind kind = EdgeKind::Gluing;
    struct Occurrence {
        int poly = -1;
        int edge = -1;
        EdgeSide side = EdgeSide::Left;
        int level = 0;  // band for side edges, chord level for horizontals
    };
    Occurrence occ[2];
};

std::vector<EdgeClass> classify_edges(const Surface& s);
bool label_is_horizontal(const Surface& s, int label);

// A three-letter window with its two transition types (the (00)/(01)/(10)/(11)
// cases) and the kept/removed verdict of the middle letter.
struct Word3 {
    int labels[3] = {0, 0, 0};
    int types[2] = {0, 0};
    bool kept = false;
    bool middle_horizontal = false;
    bool sandwiched() const { return labels[0] == labels[2]; }
    std::string case_name() const;  // "(00)", "(01)", "(10)", "(11)"
};

// Shared transition-diagram context for the combinatorial operations.
class DerivationContext {
  public:
    explicit DerivationContext(const Surface& s)
        : s_(&s), diagram_(transition_diagram(s)) {}

    const Surface& surface() const { return *s_; }
    const TransitionDiagram& diagram() const { return diagram_; }

    // 0 when the pair crosses its polygon at one level, 1 when the exit is a
    // level above. Throws InadmissiblePair when no trajectory with direction
    // in [0, theta_s) realizes the pair.
    int transition_type(int e_in, int e_out) const;

    // Main derivation rule: a letter survives when it is a horizontal edge,
    // or a gluing edge in the middle of a (00) or (11) word. The first and
    // last letters of the window lack context and are not part of the output.
    CuttingSequence derive_combinatorial(const CuttingSequence& c) const;

    // All length-2 paths of the transition diagram with verdicts, sorted by
    // middle label.
    std::vector<Word3> enumerate_words() const;

  private:
    const Surface* s_;
    TransitionDiagram diagram_;
};

int transition_type(const Surface& s, int e_in, int e_out);
CuttingSequence derive_combinatorial(const Surface& s, const CuttingSequence& c);
std::vector<Word3> enumerate_words(const Surface& s);

// Regular polygon surface shortcut: keep exactly the letters whose
// predecessor equals their successor.
CuttingSequence sandwich_derive(const Surface& s, const CuttingSequence& c);

}  // namespace flatsurf
