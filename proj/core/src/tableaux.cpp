#include "pierik/tableaux.hpp"

#include <algorithm>
#include <map>

#include "pierik/errors.hpp"

namespace pierik {

std::string Label::to_string() const {
    return std::to_string(value) + (primed ? "'" : "");
}

namespace {

bool weakly_southwest(const Box& b, const Box& of) {
    return b.row >= of.row && b.col <= of.col && b != of;
}

// The backtracking generator fills boxes in row-major order. When box B is
// placed, the boxes already labeled are those north of it plus the west part
// of its own row; the west part is B's south-west set so far, and B belongs
// to the south-west set of every placed box in the weak north-east quadrant.
// The comparability conditions are maintained incrementally from both sides.
struct Generator {
    const SkewShape& shape;
    int p;
    TableauMode mode;
    std::vector<Label> labels;
    std::vector<int> value_count;  // uses of each value 1..p
    int missing;                   // values of 1..p not used yet
    // KOG state: which placed boxes have seen a strictly smaller / strictly
    // larger label in their south-west quadrant.
    std::vector<bool> saw_smaller, saw_larger;
    std::vector<Tableau>* out;

    Generator(const SkewShape& s, int p_, TableauMode m, std::vector<Tableau>* o)
        : shape(s),
          p(p_),
          mode(m),
          labels(s.boxes().size()),
          value_count(p_ + 1, 0),
          missing(p_),
          saw_smaller(s.boxes().size(), false),
          saw_larger(s.boxes().size(), false),
          out(o) {}

    void run() { place(0); }

    void place(std::size_t idx) {
        const auto& boxes = shape.boxes();
        if (idx == boxes.size()) {
            if (missing == 0) {
                Tableau t{shape, mode, labels};
                // The generator must never outsmart the definition.
                if (validate_tableau(t) && content_is(t, p)) {
                    out->push_back(std::move(t));
                }
            }
            return;
        }
        if (missing > static_cast<int>(boxes.size() - idx)) {
            return;  // not enough boxes left to complete the content
        }
        const Box& b = boxes[idx];
        int min_rank = 0;
        bool has_west = false;
        for (std::size_t j = 0; j < idx; ++j) {
            const Box& c = boxes[j];
            if (c.row == b.row || c.col == b.col) {
                min_rank = std::max(min_rank, labels[j].rank() + 1);
            }
            if (c.row == b.row) {
                has_west = true;
            }
        }
        for (int value = 1; value <= p; ++value) {
            for (bool primed : {true, false}) {
                if (primed && (mode == TableauMode::KOG || shape.is_diagonal(b))) {
                    continue;
                }
                if (primed && has_west) {
                    continue;  // a western box is strictly smaller already
                }
                Label label{value, primed};
                if (label.rank() < min_rank) {
                    continue;
                }
                if (!northeast_ok(idx, label)) {
                    continue;
                }
                std::vector<std::size_t> marked_smaller, marked_larger;
                if (mode == TableauMode::KOG) {
                    mark_kog(idx, label, marked_smaller, marked_larger);
                    saw_smaller[idx] = has_west;
                }
                labels[idx] = label;
                if (value_count[value]++ == 0) {
                    --missing;
                }
                place(idx + 1);
                if (--value_count[value] == 0) {
                    ++missing;
                }
                for (auto j : marked_smaller) saw_smaller[j] = false;
                for (auto j : marked_larger) saw_larger[j] = false;
                saw_smaller[idx] = false;
                saw_larger[idx] = false;
            }
        }
    }

    // Checks the placement of `label` at box idx against every placed box
    // whose south-west quadrant it joins. In KLG mode the check is decisive;
    // in KOG mode it fails only when a box has now seen labels strictly on
    // both sides of its own.
    bool northeast_ok(std::size_t idx, Label label) {
        const auto& boxes = shape.boxes();
        const Box& b = boxes[idx];
        for (std::size_t j = 0; j < idx; ++j) {
            if (!weakly_southwest(b, boxes[j])) {
                continue;
            }
            if (mode == TableauMode::KLG) {
                if (!labels[j].primed && label > labels[j]) {
                    return false;
                }
                if (labels[j].primed && label < labels[j]) {
                    return false;
                }
            } else {
                if (label < labels[j] && saw_larger[j]) {
                    return false;
                }
                if (label > labels[j] && saw_smaller[j]) {
                    return false;
                }
            }
        }
        return true;
    }

    void mark_kog(std::size_t idx, Label label, std::vector<std::size_t>& marked_smaller,
                  std::vector<std::size_t>& marked_larger) {
        const auto& boxes = shape.boxes();
        const Box& b = boxes[idx];
        for (std::size_t j = 0; j < idx; ++j) {
            if (!weakly_southwest(b, boxes[j])) {
                continue;
            }
            if (label < labels[j] && !saw_smaller[j]) {
                saw_smaller[j] = true;
                marked_smaller.push_back(j);
            }
            if (label > labels[j] && !saw_larger[j]) {
                saw_larger[j] = true;
                marked_larger.push_back(j);
            }
        }
    }
};

}  // namespace

std::vector<Tableau> enumerate_tableaux(const SkewShape& theta, int p, TableauMode mode) {
    if (p < 0) {
        throw NegativeContent("tableau content requires p >= 0");
    }
    std::vector<Tableau> out;
    if (!diagram_stats(theta).is_rim) {
        return out;
    }
    if (theta.empty()) {
        if (p == 0) {
            out.push_back(Tableau{theta, mode, {}});
        }
        return out;
    }
    if (p == 0 || p > theta.weight()) {
        return out;  // content {1..p} cannot fit exactly
    }
    Generator gen(theta, p, mode, &out);
    gen.run();
    return out;
}

bool validate_tableau(const Tableau& t) {
    const auto& boxes = t.shape.boxes();
    if (t.labels.size() != boxes.size()) {
        return false;
    }
    if (!diagram_stats(t.shape).is_rim) {
        return false;
    }
    for (std::size_t i = 0; i < boxes.size(); ++i) {
        const Label& label = t.labels[i];
        if (label.value < 1) {
            return false;
        }
        if (label.primed &&
            (t.mode == TableauMode::KOG || t.shape.is_diagonal(boxes[i]))) {
            return false;
        }
        for (std::size_t j = 0; j < boxes.size(); ++j) {
            bool east = boxes[j].row == boxes[i].row && boxes[j].col > boxes[i].col;
            bool south = boxes[j].col == boxes[i].col && boxes[j].row > boxes[i].row;
            if ((east || south) && !(t.labels[j] > label)) {
                return false;
            }
        }
    }
    // South-west comparability over the weak quadrant, rechecked pairwise.
    for (std::size_t i = 0; i < boxes.size(); ++i) {
        bool below_all = true;
        bool above_all = true;
        for (std::size_t j = 0; j < boxes.size(); ++j) {
            if (weakly_southwest(boxes[j], boxes[i])) {
                if (t.labels[i] > t.labels[j]) {
                    below_all = false;
                }
                if (t.labels[i] < t.labels[j]) {
                    above_all = false;
                }
            }
        }
        if (t.mode == TableauMode::KOG) {
            if (!below_all && !above_all) {
                return false;
            }
        } else {
            if (t.labels[i].primed ? !below_all : !above_all) {
                return false;
            }
        }
    }
    return true;
}

bool content_is(const Tableau& t, int p) {
    std::vector<bool> seen(p + 1, false);
    for (const auto& label : t.labels) {
        if (label.value < 1 || label.value > p) {
            return false;
        }
        seen[label.value] = true;
    }
    for (int v = 1; v <= p; ++v) {
        if (!seen[v]) {
            return false;
        }
    }
    return true;
}

Integer signed_count(const SkewShape& theta, int p, TableauMode mode) {
    Integer count = static_cast<long>(enumerate_tableaux(theta, p, mode).size());
    return (theta.weight() - p) % 2 == 0 ? count : -count;
}

Integer tableau_coefficient(const Partition& lambda, int p, const Partition& nu,
                            const Space& space) {
    TableauMode mode;
    switch (space.kind()) {
        case Space::Kind::OG:
            mode = TableauMode::KOG;
            break;
        case Space::Kind::LG:
            mode = TableauMode::KLG;
            break;
        default:
            throw WrongSpace("tableau counting applies to OG and LG only");
    }
    return signed_count(make_skew(lambda, nu, space), p, mode);
}

std::string render_tableau(const Tableau& t) {
    const auto& boxes = t.shape.boxes();
    if (boxes.empty()) {
        return "";
    }
    std::size_t width = 1;
    for (const auto& label : t.labels) {
        width = std::max(width, label.to_string().size());
    }
    int min_col = boxes.front().col;
    for (const auto& b : boxes) {
        min_col = std::min(min_col, b.col);
    }
    std::map<int, std::map<int, std::string>> rows;
    for (std::size_t i = 0; i < boxes.size(); ++i) {
        rows[boxes[i].row][boxes[i].col] = t.labels[i].to_string();
    }
    std::string out;
    for (auto& [row, cells] : rows) {
        std::string line;
        int last_col = cells.rbegin()->first;
        for (int col = min_col; col <= last_col; ++col) {
            auto it = cells.find(col);
            std::string cell = it == cells.end() ? "" : it->second;
            cell.resize(width, ' ');
            line += cell;
            if (col != last_col) {
                line += ' ';
            }
        }
        while (!line.empty() && line.back() == ' ') {
            line.pop_back();
        }
        out += line;
        out += '\n';
    }
    return out;
}

}  // namespace pierik
