#include "fatmark/error.hpp"

namespace fatmark {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kRankMismatch: return "rank mismatch";
    case ErrorKind::kOverflow: return "overflow";
    case ErrorKind::kInvalidArgument: return "invalid argument";
    case ErrorKind::kMissingHalfEdge: return "missing half-edge";
    case ErrorKind::kDuplicateHalfEdge: return "duplicated half-edge";
    case ErrorKind::kDuplicateLabel: return "duplicated label";
    case ErrorKind::kDisconnected: return "disconnected graph";
    case ErrorKind::kValence: return "valence violation";
    case ErrorKind::kMultipleUnivalent: return "multiple univalent vertices";
    case ErrorKind::kBadTail: return "bad tail";
    case ErrorKind::kCorruptTopology: return "corrupt topology";
    case ErrorKind::kBoundaryNumber: return "boundary number";
    case ErrorKind::kTailFlip: return "tail flip";
    case ErrorKind::kLoopFlip: return "loop flip";
    case ErrorKind::kNotTrivalent: return "non-trivalent endpoint";
    case ErrorKind::kEdgeRelation: return "edge relation";
    case ErrorKind::kPathStep: return "path step";
    case ErrorKind::kNotClosed: return "path not closed";
    case ErrorKind::kInversion: return "inversion";
    case ErrorKind::kCoherence: return "coherence";
    case ErrorKind::kSurjectivity: return "surjectivity";
    case ErrorKind::kMarkingShape: return "marking shape";
    case ErrorKind::kGenus: return "genus";
    case ErrorKind::kPairing: return "pairing";
    case ErrorKind::kNoInducedAutomorphism: return "no induced automorphism";
    case ErrorKind::kNotInvertible: return "not invertible";
    case ErrorKind::kCocycleMismatch: return "cocycle mismatch";
    case ErrorKind::kUnknownGenerator: return "unknown generator";
    case ErrorKind::kIndexRange: return "index out of range";
    case ErrorKind::kMissingImage: return "missing image";
    case ErrorKind::kNotHomomorphism: return "not a homomorphism";
    case ErrorKind::kParse: return "parse error";
  }
  return "unknown";
}

}  // namespace fatmark
