#pragma once

#include <optional>
#include <string>
#include <vector>

#include "octant/groups.hpp"
#include "octant/tropical.hpp"

namespace octant {

struct Presentation {
  std::string id;              // "G1".."G12"
  std::vector<Word> relators;  // freely reduced; always include aa, bb, cc
};

const std::array<Presentation, 12>& table1();
const Presentation& presentation_by_id(const std::string& id);
std::string table1_json();

// Bounded word problem: BFS over relator rewrites (replace a substring p by
// reverse(q) whenever pq is a cyclic rotation of a relator), intermediate
// length capped at max(|w1|,|w2|) + budget. Equal iff w2 is reached.
bool word_equiv(const Presentation& p, const Word& w1, const Word& w2, int budget = 8,
                size_t stateCap = 200000);

// sphere sizes (number of new equivalence classes at each minimal length)
std::vector<long> presentation_ball(const Presentation& p, int radius, int budget = 8);

// letter -> short word in the generators: a permutation, optionally with one
// letter conjugated by one of the other two (image g or hgh)
struct GeneratorAssignment {
  std::array<int, 3> perm{0, 1, 2};
  int conj_letter = -1;
  int conj_by = -1;

  std::array<std::vector<int>, 3> images() const;
  std::string str() const;
};

const std::vector<GeneratorAssignment>& assignment_space();  // 42 entries

struct Signature {
  int ord_ab = 0, ord_ac = 0, ord_bc = 0;  // 0 means > cutoff
  bool s9 = false, s10 = false, s11 = false;
  bool operator==(const Signature&) const = default;
};

Signature measured_signature(const ModelMaps& maps, const GeneratorAssignment& a,
                             const PointSet& ps, int cutoff = 10);

struct MatchResult {
  std::string id;  // "G1".."G12" or "Unknown"
  std::optional<GeneratorAssignment> assignment;
  int depth = 0;
  bool confirmed = false;  // matched relators symbolically confirmed
};

MatchResult match_presentation(const StepSet& s, int depth = 12, uint64_t seed = kDefaultSeed);

// census fast path: signature table only, no identity scan; relations_seen
// distinguishes G1 from Unknown when no row matches
MatchResult match_from_signatures(const ModelMaps& maps, bool relations_seen, const PointSet& ps,
                                  int cutoff = 10);

// Exactness argument for G3 models: the G3 relations hold, the a-image moves
// a coordinate every word in the b,c-images fixes (so extra relations stay in
// the dihedral part and would force a finite group), and the escape
// certificate shows the group is infinite.
struct G3Exactness {
  bool relations_confirmed = false;
  bool central_separated = false;
  bool certificate_ok = false;
  std::string detail;

  bool exact() const { return relations_confirmed && central_separated && certificate_ok; }
};

G3Exactness g3_exactness(const StepSet& s, const MatchResult& match,
                         const std::optional<EscapeCertificate>& cert);

}  // namespace octant
