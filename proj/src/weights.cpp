#include "bcflab/weights.hpp"

#include <mutex>

#include "bcflab/error.hpp"

namespace bcflab::bcf {

struct WeightSystem::Impl {
    Family kind = Family::S;
    int m = 1;

    // table sources (empty optional = not a table)
    std::optional<std::vector<MPoly>> alpha_table;
    std::optional<std::vector<MPoly>> delta_table;
    std::optional<std::map<std::pair<int, long>, MPoly>> beta_table;

    // closed-form sources
    AlphaFn alpha_fn;
    AlphaFn delta_fn;
    BetaFn beta_fn;

    // optional exclusive upper bounds for closed forms wrapping finite data
    std::optional<long> alpha_limit;
    std::optional<long> delta_limit;
    std::function<bool(int, long)> beta_supplies;

    mutable std::mutex mu;
    mutable std::map<long, MPoly> alpha_memo;
    mutable std::map<long, MPoly> delta_memo;
    mutable std::map<std::pair<int, long>, MPoly> beta_memo;
};

Family WeightSystem::kind() const { return impl_->kind; }
int WeightSystem::m() const { return impl_->m; }

bool WeightSystem::supplies_alpha(long i) const {
    const Impl& im = *impl_;
    if (im.kind == Family::J || i < im.m) return false;
    if (im.alpha_table) return i - im.m < static_cast<long>(im.alpha_table->size());
    if (im.alpha_limit && i >= *im.alpha_limit) return false;
    return static_cast<bool>(im.alpha_fn);
}

bool WeightSystem::supplies_delta(long i) const {
    const Impl& im = *impl_;
    if (im.kind != Family::T || i < im.m) return false;
    if (im.delta_table) return i - im.m < static_cast<long>(im.delta_table->size());
    if (im.delta_limit && i >= *im.delta_limit) return false;
    return static_cast<bool>(im.delta_fn);
}

bool WeightSystem::supplies_beta(int ell, long i) const {
    const Impl& im = *impl_;
    if (im.kind != Family::J || ell < 0 || ell > im.m || i < ell) return false;
    if (im.beta_table) return im.beta_table->count({ell, i}) > 0;
    if (im.beta_supplies && !im.beta_supplies(ell, i)) return false;
    return static_cast<bool>(im.beta_fn);
}

MPoly WeightSystem::alpha(long i) const {
    const Impl& im = *impl_;
    if (!supplies_alpha(i)) throw MissingWeight("alpha", i);
    if (im.alpha_table) return (*im.alpha_table)[static_cast<std::size_t>(i - im.m)];
    std::lock_guard<std::mutex> lk(im.mu);
    auto it = im.alpha_memo.find(i);
    if (it == im.alpha_memo.end()) it = im.alpha_memo.emplace(i, im.alpha_fn(i)).first;
    return it->second;
}

MPoly WeightSystem::delta(long i) const {
    const Impl& im = *impl_;
    if (!supplies_delta(i)) throw MissingWeight("delta", i);
    if (im.delta_table) return (*im.delta_table)[static_cast<std::size_t>(i - im.m)];
    std::lock_guard<std::mutex> lk(im.mu);
    auto it = im.delta_memo.find(i);
    if (it == im.delta_memo.end()) it = im.delta_memo.emplace(i, im.delta_fn(i)).first;
    return it->second;
}

MPoly WeightSystem::beta(int ell, long i) const {
    const Impl& im = *impl_;
    if (!supplies_beta(ell, i)) throw MissingWeight("beta^(" + std::to_string(ell) + ")", i);
    if (im.beta_table) return im.beta_table->at({ell, i});
    std::lock_guard<std::mutex> lk(im.mu);
    auto key = std::make_pair(ell, i);
    auto it = im.beta_memo.find(key);
    if (it == im.beta_memo.end()) it = im.beta_memo.emplace(key, im.beta_fn(ell, i)).first;
    return it->second;
}

WeightSystem WeightSystem::s_table(int m, std::vector<MPoly> alphas) {
    auto im = std::make_shared<Impl>();
    im->kind = Family::S;
    im->m = m;
    im->alpha_table = std::move(alphas);
    return WeightSystem(std::move(im));
}

WeightSystem WeightSystem::t_table(int m, std::vector<MPoly> alphas, std::vector<MPoly> deltas) {
    auto im = std::make_shared<Impl>();
    im->kind = Family::T;
    im->m = m;
    im->alpha_table = std::move(alphas);
    im->delta_table = std::move(deltas);
    return WeightSystem(std::move(im));
}

WeightSystem WeightSystem::j_table(int m, std::map<std::pair<int, long>, MPoly> betas) {
    auto im = std::make_shared<Impl>();
    im->kind = Family::J;
    im->m = m;
    im->beta_table = std::move(betas);
    return WeightSystem(std::move(im));
}

WeightSystem WeightSystem::s_closed(int m, AlphaFn alpha, std::optional<long> limit) {
    auto im = std::make_shared<Impl>();
    im->kind = Family::S;
    im->m = m;
    im->alpha_fn = std::move(alpha);
    im->alpha_limit = limit;
    return WeightSystem(std::move(im));
}

WeightSystem WeightSystem::t_closed(int m, AlphaFn alpha, AlphaFn delta,
                                    std::optional<long> limit) {
    auto im = std::make_shared<Impl>();
    im->kind = Family::T;
    im->m = m;
    im->alpha_fn = std::move(alpha);
    im->delta_fn = std::move(delta);
    im->alpha_limit = limit;
    im->delta_limit = limit;
    return WeightSystem(std::move(im));
}

WeightSystem WeightSystem::j_closed(int m, BetaFn beta) {
    auto im = std::make_shared<Impl>();
    im->kind = Family::J;
    im->m = m;
    im->beta_fn = std::move(beta);
    return WeightSystem(std::move(im));
}

WeightSystem WeightSystem::s_generic(int m) {
    return s_closed(m, [](long i) { return MPoly::var("a" + std::to_string(i)); });
}

WeightSystem WeightSystem::t_generic(int m) {
    return t_closed(
        m, [](long i) { return MPoly::var("a" + std::to_string(i)); },
        [](long i) { return MPoly::var("d" + std::to_string(i)); });
}

WeightSystem WeightSystem::j_generic(int m) {
    return j_closed(m, [](int ell, long i) {
        return MPoly::var("b" + std::to_string(ell) + "_" + std::to_string(i));
    });
}

WeightSystem WeightSystem::substituted(const std::map<std::string, MPoly>& assignment) const {
    WeightSystem self = *this;
    auto im = std::make_shared<Impl>();
    im->kind = impl_->kind;
    im->m = impl_->m;
    if (impl_->alpha_table)
        im->alpha_limit = impl_->m + static_cast<long>(impl_->alpha_table->size());
    else
        im->alpha_limit = impl_->alpha_limit;
    if (impl_->delta_table)
        im->delta_limit = impl_->m + static_cast<long>(impl_->delta_table->size());
    else
        im->delta_limit = impl_->delta_limit;
    switch (impl_->kind) {
        case Family::S:
            im->alpha_fn = [self, assignment](long i) { return self.alpha(i).substitute(assignment); };
            break;
        case Family::T:
            im->alpha_fn = [self, assignment](long i) { return self.alpha(i).substitute(assignment); };
            im->delta_fn = [self, assignment](long i) { return self.delta(i).substitute(assignment); };
            break;
        case Family::J:
            im->beta_fn = [self, assignment](int ell, long i) {
                return self.beta(ell, i).substitute(assignment);
            };
            im->beta_supplies = [self](int ell, long i) { return self.supplies_beta(ell, i); };
            break;
    }
    return WeightSystem(std::move(im));
}

}  // namespace bcflab::bcf
