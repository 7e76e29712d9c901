#include "mplang/activation.hpp"

#include <stdexcept>

#include "mplang/errors.hpp"

namespace mplang {

Activation::Activation(ActivationId id,
                       std::vector<Rational> breakpoints,
                       std::vector<Rational> at_breakpoints,
                       std::vector<AffinePiece> pieces,
                       std::optional<EventuallyConstant> meta)
    : id_(std::move(id)),
      breakpoints_(std::move(breakpoints)),
      at_breakpoints_(std::move(at_breakpoints)),
      pieces_(std::move(pieces)),
      meta_(std::move(meta)) {
    if (id_.empty()) throw std::invalid_argument("activation: empty id");
    if (pieces_.size() != breakpoints_.size() + 1)
        throw std::invalid_argument("activation '" + id_ + "': need breakpoints+1 pieces");
    if (at_breakpoints_.size() != breakpoints_.size())
        throw std::invalid_argument("activation '" + id_ + "': need one value per breakpoint");
    for (std::size_t i = 1; i < breakpoints_.size(); ++i)
        if (!(breakpoints_[i - 1] < breakpoints_[i]))
            throw std::invalid_argument("activation '" + id_ + "': breakpoints not strictly increasing");
    if (meta_) {
        // Validate the tails against the piecewise data.
        const auto& m = *meta_;
        if (!(m.t_minus < m.t_plus))
            throw std::invalid_argument("activation '" + id_ + "': t- must be below t+");
        if (pieces_.front().slope != Rational(0) || pieces_.front().intercept != m.f_minus)
            throw std::invalid_argument("activation '" + id_ + "': left tail is not constant f-");
        if (pieces_.back().slope != Rational(0) || pieces_.back().intercept != m.f_plus)
            throw std::invalid_argument("activation '" + id_ + "': right tail is not constant f+");
        if ((*this)(m.t_minus) != m.f_minus || (*this)(m.t_plus) != m.f_plus)
            throw std::invalid_argument("activation '" + id_ + "': tail endpoints disagree with pieces");
        if (!breakpoints_.empty() &&
            (m.t_minus > breakpoints_.front() || m.t_plus < breakpoints_.back()))
            throw std::invalid_argument("activation '" + id_ + "': thresholds do not cover the breakpoints");
    }
}

Rational Activation::operator()(const Rational& x) const {
    // Find the first breakpoint >= x.
    std::size_t lo = 0, hi = breakpoints_.size();
    while (lo < hi) {
        std::size_t mid = (lo + hi) / 2;
        if (breakpoints_[mid] < x)
            lo = mid + 1;
        else
            hi = mid;
    }
    if (lo < breakpoints_.size() && breakpoints_[lo] == x) return at_breakpoints_[lo];
    return pieces_[lo](x);
}

double Activation::eval_double(double x) const {
    std::size_t lo = 0, hi = breakpoints_.size();
    while (lo < hi) {
        std::size_t mid = (lo + hi) / 2;
        if (breakpoints_[mid].to_double() < x)
            lo = mid + 1;
        else
            hi = mid;
    }
    if (lo < breakpoints_.size() && breakpoints_[lo].to_double() == x)
        return at_breakpoints_[lo].to_double();
    return pieces_[lo].slope.to_double() * x + pieces_[lo].intercept.to_double();
}

const Catalogue& Catalogue::standard() {
    static const Catalogue cat = [] {
        Catalogue c;
        auto put = [&c](Activation a) { c.entries_.emplace(a.id(), std::move(a)); };
        put(Activation("relu", {Rational(0)}, {Rational(0)},
                       {{Rational(0), Rational(0)}, {Rational(1), Rational(0)}}));
        put(Activation("trrelu", {Rational(0), Rational(1)}, {Rational(0), Rational(1)},
                       {{Rational(0), Rational(0)}, {Rational(1), Rational(0)}, {Rational(0), Rational(1)}},
                       EventuallyConstant{Rational(0), Rational(1), Rational(0), Rational(1)}));
        put(Activation("sign", {Rational(0)}, {Rational(0)},
                       {{Rational(0), Rational(-1)}, {Rational(0), Rational(1)}},
                       EventuallyConstant{Rational(-1), Rational(1), Rational(-1), Rational(1)}));
        put(Activation("step", {Rational(0)}, {Rational(0)},
                       {{Rational(0), Rational(0)}, {Rational(0), Rational(1)}},
                       EventuallyConstant{Rational(0), Rational(1), Rational(0), Rational(1)}));
        put(Activation("id", {}, {}, {{Rational(1), Rational(0)}}));
        return c;
    }();
    return cat;
}

const Activation* Catalogue::find(const ActivationId& id) const {
    auto it = entries_.find(id);
    return it == entries_.end() ? nullptr : &it->second;
}

const Activation& Catalogue::at(const ActivationId& id) const {
    const Activation* a = find(id);
    if (!a) throw EvalError("unknown activation '" + id + "'");
    return *a;
}

Catalogue Catalogue::with(Activation a) const {
    Catalogue c = *this;
    c.entries_.insert_or_assign(a.id(), std::move(a));
    return c;
}

}  // namespace mplang
