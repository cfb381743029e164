#include "descent/oscillating.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>

#include "parse_util.hpp"

namespace descent {

namespace {

struct Step {
    bool add = false;
    int row = 0;  // row of the box that changed, 1-based
};

// The single-box move from `from` to `to`, if there is one.
std::optional<Step> box_step(const Shape& from, const Shape& to) {
    const int h = std::max(from.height(), to.height());
    std::optional<Step> step;
    for (int r = 1; r <= h; ++r) {
        const int diff = to.row_length(r) - from.row_length(r);
        if (diff == 0) continue;
        if ((diff != 1 && diff != -1) || step) return std::nullopt;
        step = Step{diff == 1, r};
    }
    return step;
}

Step checked_step(const Shape& from, const Shape& to) {
    auto step = box_step(from, to);
    if (!step) throw std::logic_error("oscillating tableau: consecutive shapes do not differ by one box");
    return *step;
}

void collect_walks(std::vector<Shape>& walk, int length, std::vector<OscillatingTableau>& out) {
    const Shape& current = walk.back();
    const int remaining = length + 1 - static_cast<int>(walk.size());
    if (remaining == 0) {
        if (current.size() == 0) out.emplace_back(walk);
        return;
    }
    std::vector<int> parts = current.parts();
    const int h = current.height();
    if (current.size() + 1 <= remaining - 1) {
        for (int r = 0; r <= h; ++r) {
            if (r > 0 && parts[r - 1] == (r < h ? parts[r] : 0)) continue;
            std::vector<int> next = parts;
            if (r == h) next.push_back(1); else ++next[r];
            walk.emplace_back(std::move(next));
            collect_walks(walk, length, out);
            walk.pop_back();
        }
    }
    for (int r = 0; r < h; ++r) {
        if (r + 1 < h && parts[r] == parts[r + 1]) continue;
        std::vector<int> next = parts;
        if (--next[r] == 0) next.pop_back();
        walk.emplace_back(std::move(next));
        collect_walks(walk, length, out);
        walk.pop_back();
    }
}

}  // namespace

std::vector<OscillatingTableau> enumerate_oscillating(int length) {
    if (length < 0 || length % 2 != 0) throw std::invalid_argument("enumerate_oscillating: length must be even");
    std::vector<OscillatingTableau> out;
    std::vector<Shape> walk{Shape{}};
    collect_walks(walk, length, out);
    return out;
}

ValidationReport validate(std::span<const Shape> shapes) {
    if (shapes.empty()) return {false, 0, "no shapes"};
    if (!shapes.front().parts().empty()) return {false, 0, "first shape is not empty"};
    for (std::size_t i = 1; i < shapes.size(); ++i) {
        if (!box_step(shapes[i - 1], shapes[i])) {
            return {false, static_cast<int>(i),
                    "step " + std::to_string(i) + " does not add or remove exactly one box"};
        }
    }
    if (!shapes.back().parts().empty()) {
        return {false, static_cast<int>(shapes.size()) - 1, "last shape is not empty"};
    }
    return {};
}

OscillatingTableau::OscillatingTableau(std::vector<Shape> shapes) : shapes_(std::move(shapes)) {
    const auto report = validate(shapes_);
    if (!report.ok) throw std::invalid_argument("oscillating tableau: " + report.message);
}

OscillatingTableau OscillatingTableau::reversed() const {
    std::vector<Shape> r(shapes_.rbegin(), shapes_.rend());
    return OscillatingTableau(std::move(r));
}

OscillatingTableau sundaram(const Permutation& involution, std::vector<Tableau>* trace) {
    const int n = involution.size();
    if (!is_involution(involution)) throw std::invalid_argument("sundaram: not an involution");
    if (!fixed_points(involution).empty()) throw std::invalid_argument("sundaram: fixed points present");

    std::vector<Shape> shapes{Shape{}};
    Tableau t;
    if (trace) trace->assign(1, t);
    for (int d = 1; d <= n; ++d) {
        const int partner = involution(d);
        if (partner > d) {
            t = rs_insert(std::move(t), partner).first;
        } else {
            t = jdt_delete(std::move(t), d);
        }
        shapes.push_back(t.shape());
        if (trace) trace->push_back(t);
    }
    return OscillatingTableau(std::move(shapes));
}

Permutation sundaram_inverse(const OscillatingTableau& o) {
    const auto& shapes = o.shapes();
    const int n = o.size();
    std::vector<int> images(n, 0);
    Tableau t;
    for (int d = n; d >= 1; --d) {
        const Shape& before = shapes[d - 1];
        const Shape& after = shapes[d];
        const Step step = checked_step(before, after);
        if (step.add) {
            // Step d inserted the partner of the opener d.
            const Cell corner{step.row, after.row_length(step.row)};
            auto [rest, partner] = reverse_bump(std::move(t), corner);
            if (partner <= d) throw std::logic_error("sundaram_inverse: extracted partner is not a closer");
            images[d - 1] = partner;
            images[partner - 1] = d;
            t = std::move(rest);
        } else {
            // Step d deleted the closer d; put it back at the vacated corner.
            const Cell corner{step.row, before.row_length(step.row)};
            t = reverse_jdt_place(std::move(t), d, corner);
        }
    }
    return Permutation(std::move(images));
}

OscillatingTableau transpose(const OscillatingTableau& o) {
    std::vector<Shape> shapes;
    shapes.reserve(o.shapes().size());
    for (const Shape& s : o.shapes()) shapes.push_back(s.transpose());
    return OscillatingTableau(std::move(shapes));
}

Permutation chen_iota(const Permutation& fixed_point_free) {
    return sundaram_inverse(transpose(sundaram(fixed_point_free)));
}

Matching chen_iota(const Matching& perfect) {
    if (!perfect.is_perfect()) throw std::invalid_argument("chen_iota: matching has unmatched points");
    return from_involution(chen_iota(to_involution(perfect)));
}

DescentSet kim_des(const OscillatingTableau& o) {
    const auto& shapes = o.shapes();
    const int n = o.size();
    DescentSet d(n, false);
    for (int i = 1; i < n; ++i) {
        const Step first = checked_step(shapes[i - 1], shapes[i]);
        const Step second = checked_step(shapes[i], shapes[i + 1]);
        const bool add_then_delete = first.add && !second.add;
        const bool add_then_lower_add = first.add && second.add && second.row > first.row;
        const bool delete_then_higher_delete = !first.add && !second.add && second.row < first.row;
        if (add_then_delete || add_then_lower_add || delete_then_higher_delete) d.insert(i);
    }
    return d;
}

OscillatingTableau parse_oscillating(std::string_view text) {
    std::vector<Shape> shapes;
    std::size_t start = 0;
    while (true) {
        const std::size_t end = text.find(';', start);
        const auto piece = text.substr(start, end == std::string_view::npos ? std::string_view::npos : end - start);
        shapes.push_back(parse_shape(piece));
        if (end == std::string_view::npos) break;
        start = end + 1;
    }
    return OscillatingTableau(std::move(shapes));
}

std::string format_oscillating(const OscillatingTableau& o) {
    std::string out;
    for (std::size_t i = 0; i < o.shapes().size(); ++i) {
        if (i > 0) out += ';';
        out += format_shape(o.shapes()[i]);
    }
    return out;
}

}  // namespace descent
