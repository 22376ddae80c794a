#pragma once

// Orientation prescriptions on a Hasse diagram and the combinatorial flow
// calculus: anomalies, the flow and matching conditions, acyclicity of the
// reoriented diagram, deformation to an acyclic flow, and the translation
// between acyclic flows and discrete Morse functions.
//
// A prescription assigns +1/-1 to every Hasse edge. The reoriented diagram
// keeps a +1 edge pointing parent -> child and reverses a -1 edge. The anomaly
// of a face is the number of -1 signs on its incident Hasse edges; a flow has
// every anomaly <= 1, equivalently the -1 edges form a matching on the faces.

#include <cstdint>
#include <vector>

#include "morseflow/complex.hpp"

namespace morseflow {

struct OrientationPrescription {
  std::vector<int8_t> signs;  // indexed like HasseDiagram::edges, each +1 or -1

  int sign_count() const;  // number of -1 entries
  bool operator==(const OrientationPrescription&) const = default;
};

OrientationPrescription all_plus(const HasseDiagram& h);

struct AnomalyProfile {
  std::vector<int> down;  // -1 signs on edges where the face is the parent
  std::vector<int> up;    // -1 signs on edges where the face is the child

  int total(int face) const { return down[face] + up[face]; }
};

AnomalyProfile anomaly(const HasseDiagram& h, const OrientationPrescription& w);

bool is_flow(const HasseDiagram& h, const OrientationPrescription& w);

// Independent route to the same condition: the -1 edges, read as face pairs,
// touch no face twice.
bool is_matching(const HasseDiagram& h, const OrientationPrescription& w);

// No directed cycle in the reoriented diagram.
bool is_acyclic(const HasseDiagram& h, const OrientationPrescription& w);

enum class DeformPolicy {
  Deterministic,  // DFS from the lowest face index, first back edge closes the
                  // cycle, flip the lowest-indexed -1 edge on it
  SeededRandom,   // flip a uniformly chosen -1 edge on that same cycle
};

struct DeformResult {
  OrientationPrescription prescription;
  std::vector<int> flipped;  // Hasse edge indices, in flip order
};

// Repeatedly breaks a directed cycle by flipping one -1 edge on it. Every
// directed cycle alternates up and down moves, so it carries a -1 edge and
// each flip lowers sign_count by one; termination is forced. The input must
// be a flow; the result is an acyclic flow.
DeformResult deform_to_acyclic(const HasseDiagram& h, const OrientationPrescription& w,
                               DeformPolicy policy = DeformPolicy::Deterministic,
                               uint64_t seed = 0);

struct MorseFunction {
  std::vector<long long> values;  // indexed by face
};

// Discrete Morse condition: along covering relations f should drop from
// parent to child, and each face tolerates at most one incident exception.
bool is_morse(const HasseDiagram& h, const std::vector<long long>& values);

// Builds an injective Morse function from an acyclic flow by ranking faces
// along longest paths of the reoriented diagram. Rejects cyclic inputs.
MorseFunction morse_from_flow(const HasseDiagram& h, const OrientationPrescription& w);

struct MorsePrescription {
  OrientationPrescription prescription;
  bool morse;  // whether the input function was Morse
};

// The prescription induced by an arbitrary integer function on faces:
// a Hasse edge gets -1 exactly when the function does not decrease from
// parent to child. Reports whether the function was Morse (in which case the
// prescription is an acyclic flow).
MorsePrescription flow_from_morse(const HasseDiagram& h, const std::vector<long long>& values);

}  // namespace morseflow
