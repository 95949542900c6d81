#pragma once

#include <string>
#include <vector>

#include "pierik/integer.hpp"
#include "pierik/skew.hpp"

namespace pierik {

/// KOG labels are plain positive integers. KLG labels come from the ordered
/// alphabet 1' < 1 < 2' < 2 < ... and primed labels never sit on the diagonal.
enum class TableauMode { KOG, KLG };

struct Label {
    int value = 0;
    bool primed = false;

    /// Position in the total order 1' < 1 < 2' < 2 < ... (injective).
    int rank() const { return 2 * value - (primed ? 1 : 0); }

    std::string to_string() const;

    friend bool operator==(const Label& a, const Label& b) {
        return a.rank() == b.rank();
    }
    friend auto operator<=>(const Label& a, const Label& b) {
        return a.rank() <=> b.rank();
    }
};

/// "South-west of a box" means the weak quadrant: every other box in a row
/// weakly below and a column weakly left. The strict-quadrant reading
/// overcounts (a shifted column of three meeting the diagonal would get four
/// KLG fillings of content {1,2,3} where the coefficient is 1); the weak
/// reading agrees with the corner-sum oracle on every tested shape.
struct Tableau {
    SkewShape shape;
    TableauMode mode = TableauMode::KOG;
    std::vector<Label> labels;  // aligned with shape.boxes(), i.e. row-major
};

/// All tableaux of the given mode on theta with content exactly {1,...,p},
/// sorted lexicographically by the row-major label sequence. Non-rims admit
/// none; the empty shape admits exactly the empty tableau when p = 0.
/// Throws NegativeContent when p < 0.
std::vector<Tableau> enumerate_tableaux(const SkewShape& theta, int p, TableauMode mode);

/// Full re-check of every defining condition, independent of the generator:
/// rim shape, strictly increasing rows and columns, the south-west
/// comparability conditions, and unprimed diagonal boxes in KLG mode.
bool validate_tableau(const Tableau& t);

/// True when the set of label values is exactly {1,...,p}.
bool content_is(const Tableau& t, int p);

/// (-1)^(|theta|-p) times the number of tableaux.
Integer signed_count(const SkewShape& theta, int p, TableauMode mode);

/// Pieri coefficient via tableau counting; KOG for OG spaces, KLG for LG.
/// Throws WrongSpace for type A.
Integer tableau_coefficient(const Partition& lambda, int p, const Partition& nu,
                            const Space& space);

/// One line per non-empty row; labels padded to a common width and separated
/// by single spaces; skipped columns render as blank cells.
std::string render_tableau(const Tableau& t);

}  // namespace pierik
