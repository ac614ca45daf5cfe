#include "splitegh/egh.hpp"

#include <algorithm>
#include <exception>
#include <map>
#include <mutex>
#include <thread>

#include "splitegh/errors.hpp"

namespace splitegh {

namespace {

Monomial drop_last_variable(const Monomial& m) {
  auto e = m.exponents();
  return Monomial(std::vector<int>(e.begin(), e.end() - 1));
}

std::string join(const std::vector<std::uint64_t>& v) {
  std::string s;
  for (std::size_t k = 0; k < v.size(); ++k) s += (k ? "," : "") + std::to_string(v[k]);
  return s;
}

[[noreturn]] void invariant(int n, int d, const std::string& what) {
  throw InvariantError("degree step d=" + std::to_string(d) + " in " + std::to_string(n) + " variables: " + what);
}

class Construction {
 public:
  explicit Construction(const EghOptions& options) : options_(options) {}

  // An LPP ideal with the Hilbert function of `ideal` through `top`.
  LppIdeal run(const IdealPresentation& ideal, const SplitSequence& seq, int top, std::vector<DegreeStep>* steps) {
    const int n = seq.num_vars();
    const std::vector<int> powers = seq.degrees();
    const IdealTower tower = ideal_tower(ideal, top);
    const HilbertFunction h = tower.hilbert(top);
    if (n == 1) return realize(h, powers, 1, 0);

    // the answer depends only on the ideal and the powers; nested slices
    // repeat a lot, so finished ones are remembered
    std::string key;
    if (!steps) {
      key = memo_key(tower, powers, top);
      std::lock_guard lock(memo_mutex_);
      if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    }
    LppIdeal out = build(tower, h, seq, top, steps);
    if (!steps) {
      std::lock_guard lock(memo_mutex_);
      memo_.emplace(std::move(key), out);
    }
    return out;
  }

  LppIdeal build(const IdealTower& tower, const HilbertFunction& h, const SplitSequence& seq, int top,
                 std::vector<DegreeStep>* steps) {
    const int n = seq.num_vars();
    const std::vector<int> powers = seq.degrees();

    const IdealTower seq_tower = ideal_tower(seq.ideal(), top + 1);
    std::vector<std::optional<LppIdeal>> compressed(static_cast<std::size_t>(top + 1));
    std::vector<DegreeStep> records(static_cast<std::size_t>(top + 1));

    auto work = [&](int d) {
      DegreeStep* rec = steps ? &records[static_cast<std::size_t>(d)] : nullptr;
      MonomialIdeal k = step(tower, seq_tower, seq, h, d, top, rec);
      LppIdeal lpp = realize(k.hilbert(), powers, n, d);
      if (rec) {
        for (int t = 0; t <= lpp.truncation(); ++t) rec->lpp_segment_sizes.push_back(lpp.segment_size(t));
      }
      compressed[static_cast<std::size_t>(d)] = std::move(lpp);
    };
    for_each_degree(top, steps != nullptr, work);

    // Degree d of the glued ideal comes from the d-th compressed ideal.
    std::vector<std::size_t> sizes;
    for (int d = 0; d <= top; ++d) {
      const LppIdeal& here = *compressed[static_cast<std::size_t>(d)];
      sizes.push_back(here.segment_size(d));
      if (d < top && here.segment_size(d + 1) > compressed[static_cast<std::size_t>(d + 1)]->segment_size(d + 1))
        invariant(n, d, "degree " + std::to_string(d + 1) + " of the step-" + std::to_string(d) +
                            " ideal is not inside the step-" + std::to_string(d + 1) + " ideal");
    }
    std::optional<LppIdeal> glued;
    try {
      glued.emplace(powers, sizes);
    } catch (const NotRealizableError& e) {
      invariant(n, top, std::string("glued segments do not form an ideal: ") + e.what());
    }
    if (!(glued->hilbert() == h))
      invariant(n, top, "glued ideal has H = " + glued->hilbert().to_string() + ", input has " + h.to_string());
    if (steps) *steps = std::move(records);
    return *glued;
  }

  MonomialIdeal step(const IdealTower& tower, const IdealTower& seq_tower, const SplitSequence& seq,
                     const HilbertFunction& h, int d, int top, DegreeStep* rec) {
    const int n = seq.num_vars();
    const Field field = seq.field();
    const int t_max = std::min(d + 1, top);
    const IdealTower j = step_ideal(seq_tower, tower, d);
    const HilbertFunction hj = j.hilbert(t_max);

    std::vector<std::size_t> chain;
    const std::vector<Polynomial> qs = order_factors(j, seq.factors(n), d, &chain);
    const int s = static_cast<int>(qs.size());

    std::vector<HilbertFunction> slice_h;
    std::vector<MonomialIdeal> slice_l;
    std::vector<LppIdeal> slice_lpp;
    IdealTower c = j;
    for (int i = 0; i < s && t_max - i >= 0; ++i) {
      const Polynomial& q = qs[static_cast<std::size_t>(i)];
      const int slice_top = t_max - i;
      const IdealTower ji = add_principal_tower(c, q);
      const HilbertFunction hi = ji.hilbert(slice_top);

      // S/J_i is a polynomial ring in n-1 variables modulo the image of J_i
      const LinearQuotientMap map = linear_quotient_map(q);
      IdealPresentation image(n - 1, field);
      const IdealPresentation pres = ji.presentation();
      for (const auto& g : pres.generators()) {
        Polynomial img = map.apply(g);
        if (!img.is_zero()) image.add_generator(std::move(img));
      }
      std::vector<std::vector<Polynomial>> image_factors;
      for (int k = 1; k < n; ++k) {
        std::vector<Polynomial> fs;
        for (const auto& f : seq.factors(k)) {
          Polynomial img = map.apply(f);
          if (img.is_zero())
            invariant(n, d, "factor " + f.to_string() + " of f_" + std::to_string(k) + " vanishes modulo " + q.to_string());
          fs.push_back(std::move(img));
        }
        image_factors.push_back(std::move(fs));
      }
      const SplitSequence image_seq(n - 1, field, std::move(image_factors));
      for (const auto& g : image_seq.generators()) image.add_generator(g);

      std::optional<LppIdeal> li;
      if (options_.recurse) {
        li.emplace(run(image, image_seq, slice_top, nullptr));
        if (!(li->hilbert() == hi))
          invariant(n, d, "slice " + std::to_string(i) + " has H = " + hi.to_string() + " but its image in " +
                              std::to_string(n - 1) + " variables gives " + li->hilbert().to_string());
      } else {
        li.emplace(realize(hi, image_seq.degrees(), n - 1, d));
      }

      if (rec) {
        SliceRecord sr;
        sr.index = i;
        sr.hilbert = hi;
        for (int t = 0; t <= li->truncation(); ++t) sr.segment_sizes.push_back(li->segment_size(t));
        sr.image_vars = n - 1;
        for (int k = 1; k < n; ++k) {
          std::string f;
          for (const auto& q2 : image_seq.factors(k)) f += "(" + q2.to_string() + ")";
          sr.image_sequence.push_back(f);
        }
        sr.certified = options_.recurse;
        rec->slices.push_back(std::move(sr));
      }
      slice_h.push_back(hi);
      slice_l.push_back(li->to_monomial_ideal());
      slice_lpp.push_back(std::move(*li));
      if (i + 1 < s) c = colon_tower(c, q);
    }

    // H(S/J, t) telescopes over the slices
    for (int t = 0; t <= t_max; ++t) {
      std::uint64_t sum = 0;
      for (int i = 0; i < static_cast<int>(slice_h.size()) && i <= t; ++i) sum += slice_h[static_cast<std::size_t>(i)][t - i];
      if (sum != hj[t])
        invariant(n, d, "slice functions sum to " + std::to_string(sum) + " at t=" + std::to_string(t) + ", H(S/J) is " +
                            std::to_string(hj[t]));
    }

    // L_{i,t} inside L_{i+1,t} for t <= d - i
    for (int i = 0; i + 1 < static_cast<int>(slice_lpp.size()); ++i) {
      const int last = std::min(d - i, slice_lpp[static_cast<std::size_t>(i + 1)].truncation());
      for (int t = 0; t <= last; ++t)
        if (slice_lpp[static_cast<std::size_t>(i)].segment_size(t) > slice_lpp[static_cast<std::size_t>(i + 1)].segment_size(t))
          invariant(n, d, "L_" + std::to_string(i) + " is not inside L_" + std::to_string(i + 1) + " in degree " +
                              std::to_string(t));
    }

    // K = < z x_n^i : z in L_i > + < x_n^s >
    MonomialIdeal k(n, t_max);
    for (int t = 0; t <= t_max; ++t)
      for (const auto& m : enumerate_monomials(n, t)) {
        const int e = m.exponent(n);
        bool member = e >= s;
        if (!member) {
          const Monomial u = drop_last_variable(m);
          for (int i = 0; i <= e && i < static_cast<int>(slice_l.size()) && !member; ++i)
            member = slice_l[static_cast<std::size_t>(i)].contains(u);
        }
        if (member) k.insert(m);
      }
    const HilbertFunction hk = k.hilbert();
    for (int t = 0; t <= t_max; ++t)
      if (hk[t] != hj[t])
        invariant(n, d, "H(S/K) = " + hk.to_string() + " differs from H(S/J) = " + hj.to_string());
    if (hk[d] != h[d]) invariant(n, d, "H(S/K, d) differs from the input");
    if (d + 1 <= top && hk[d + 1] < h[d + 1]) invariant(n, d, "H(S/K, d+1) is below the input");

    if (rec) {
      rec->degree = d;
      for (const auto& q : qs) rec->factor_order.push_back(q.to_string());
      rec->chain_dims = std::move(chain);
      rec->j_hilbert = hj;
      rec->k_hilbert = hk;
      for (const auto& g : k.minimal_generators()) rec->k_generators.push_back(g.to_string());
      rec->input_at_d = h[d];
      rec->k_at_d = hk[d];
      if (d + 1 <= top) {
        rec->input_at_next = h[d + 1];
        rec->k_at_next = hk[d + 1];
      }
    }
    return k;
  }

 private:
  static LppIdeal realize(const HilbertFunction& h, const std::vector<int>& powers, int n, int d) {
    try {
      return lpp_realize(h, powers);
    } catch (const NotRealizableError& e) {
      invariant(n, d, "H = " + h.to_string() + " has no lex-plus-powers realization: " + e.what());
    }
  }

  // Degree steps are independent; only the outermost level fans out.
  template <class F>
  void for_each_degree(int top, bool outermost, F&& work) {
    const int threads = outermost ? std::max(1, options_.threads) : 1;
    if (threads == 1) {
      for (int d = 0; d <= top; ++d) work(d);
      return;
    }
    std::vector<std::exception_ptr> errors(static_cast<std::size_t>(threads));
    std::vector<std::thread> pool;
    for (int w = 0; w < threads; ++w)
      pool.emplace_back([&, w] {
        try {
          for (int d = w; d <= top; d += threads) work(d);
        } catch (...) {
          errors[static_cast<std::size_t>(w)] = std::current_exception();
        }
      });
    for (auto& t : pool) t.join();
    for (auto& e : errors)
      if (e) std::rethrow_exception(e);
  }

  static std::string memo_key(const IdealTower& tower, const std::vector<int>& powers, int top) {
    std::string key = std::to_string(top) + "|";
    for (int a : powers) key += std::to_string(a) + ",";
    for (int t = 0; t <= top; ++t) {
      const auto comp = tower.component(t);
      key += "|";
      if (comp->is_full()) {
        key += "F";
        break;
      }
      for (const Row& r : comp->rows()) {
        key += ";";
        for (std::size_t k = 0; k < r.size(); ++k)
          if (!r[k].is_zero()) key += std::to_string(k) + ":" + r[k].to_string() + " ";
      }
    }
    return key;
  }

  const EghOptions& options_;
  std::mutex memo_mutex_;
  std::map<std::string, LppIdeal> memo_;
};

}  // namespace

// -------------------------------------------------------------------- EghInput

EghInput::EghInput(IdealPresentation ideal, SplitSequence sequence)
    : ideal_(std::move(ideal)), sequence_(std::move(sequence)) {
  if (sequence_.num_vars() != ideal_.num_vars() || !(sequence_.field() == ideal_.field()))
    throw ArgumentError("sequence and ideal live in different rings");
  if (sequence_.size() != sequence_.num_vars())
    throw ArgumentError("need exactly " + std::to_string(sequence_.num_vars()) + " forms in the sequence, got " +
                        std::to_string(sequence_.size()));
  if (!is_regular_general(sequence_)) throw ArgumentError("the sequence is not regular");
  int top = 0;
  for (int a : sequence_.degrees()) top = std::max(top, a);
  const IdealTower tower = ideal_tower(ideal_, top);
  for (int i = 1; i <= sequence_.size(); ++i)
    if (!tower.component(sequence_.degree(i))->contains(sequence_.generator(i)))
      throw ArgumentError("f_" + std::to_string(i) + " = " + sequence_.generator(i).to_string() + " is not in the ideal");
}

// ------------------------------------------------------------------ the steps

std::vector<Polynomial> order_factors(const IdealTower& j, const std::vector<Polynomial>& qs, int d,
                                      std::vector<std::size_t>* dims) {
  if (qs.empty()) throw ArgumentError("need at least one factor");
  for (const auto& q : qs)
    if (!q.is_linear_form()) throw ArgumentError("factor " + q.to_string() + " is not a nonzero linear form");
  std::vector<std::size_t> remaining(qs.size());
  for (std::size_t k = 0; k < qs.size(); ++k) remaining[k] = k;
  std::vector<Polynomial> out;
  IdealTower c = j;
  for (int step = 0; remaining.size() > 1; ++step) {
    const int deg = d - step;
    std::size_t best = 0;
    std::size_t best_dim = 0;
    for (std::size_t r = 0; r < remaining.size(); ++r) {
      const Polynomial& q = qs[remaining[r]];
      const std::size_t dim = deg < 0 ? 0 : intersect_dim(*c.component(deg), principal_component(q, deg));
      if (r == 0 || dim > best_dim) {
        best = r;
        best_dim = dim;
      }
    }
    out.push_back(qs[remaining[best]]);
    if (dims) dims->push_back(best_dim);
    remaining.erase(remaining.begin() + static_cast<std::ptrdiff_t>(best));
    if (remaining.size() > 1) c = colon_tower(c, out.back());
  }
  out.push_back(qs[remaining.front()]);
  return out;
}

IdealTower step_ideal(const IdealTower& sequence_ideal, const IdealTower& ideal, int d) {
  const int n = ideal.num_vars();
  std::vector<std::shared_ptr<const GradedBasis>> comps;
  for (int t = 0; t <= d + 1; ++t) {
    std::shared_ptr<const GradedBasis> comp;
    if (t < d)
      comp = sequence_ideal.component(t);
    else if (t == d)
      comp = ideal.component(d);
    else
      comp = std::make_shared<GradedBasis>(sum_spaces(multiply_space(*ideal.component(d)), *sequence_ideal.component(t)));
    comps.push_back(comp);
    if (comp->is_full()) break;
  }
  return IdealTower(n, ideal.field(), std::move(comps));
}

MonomialIdeal theorem21_degree_step(const EghInput& input, int d, const EghOptions& options, DegreeStep* record) {
  const int n = input.num_vars();
  if (n < 2) throw ArgumentError("a degree step needs at least two variables");
  const int top = options.max_degree.value_or(input.truncation());
  if (d < 0 || d > top) throw ArgumentError("degree " + std::to_string(d) + " is outside 0.." + std::to_string(top));
  const IdealTower tower = ideal_tower(input.ideal(), top);
  const IdealTower seq_tower = ideal_tower(input.sequence().ideal(), top + 1);
  Construction c(options);
  return c.step(tower, seq_tower, input.sequence(), tower.hilbert(top), d, top, record);
}

EghResult egh_construct(const EghInput& input, const EghOptions& options) {
  const int top = options.max_degree.value_or(input.truncation());
  if (top < 0) throw ArgumentError("truncation degree must be non-negative");
  Construction c(options);
  std::vector<DegreeStep> steps;
  LppIdeal lpp = c.run(input.ideal(), input.sequence(), top, &steps);

  EghResult result{lpp.to_monomial_ideal(), lpp.powers(), lpp.hilbert(), std::move(steps), {}, {}};
  const int s = input.sequence().degree(input.sequence().size());
  for (int j = 0; j < s; ++j) {
    Lemma20Record r;
    r.j = j;
    r.holds = lemma20_check(input.sequence(), j, &r.hilbert);
    result.lemma20.push_back(std::move(r));
  }
  result.report = verify(input, result);
  if (!result.report.ok) {
    std::string msg = "verification failed:";
    for (const auto& p : result.report.problems) msg += " " + p + ";";
    throw InvariantError(msg);
  }
  return result;
}

bool lemma20_check(const SplitSequence& sequence, int j, std::vector<std::string>* hilbert) {
  const auto& qs = sequence.factors(sequence.size());
  const int s = static_cast<int>(qs.size());
  if (j < 0 || j >= s) throw ArgumentError("j must lie in 0.." + std::to_string(s - 1));
  const int top = sequence.socle_bound() + 1;
  IdealTower c = ideal_tower(sequence.ideal(), top + s);
  for (int k = 0; k < j; ++k) c = colon_tower(c, qs[static_cast<std::size_t>(k)]);
  std::optional<HilbertFunction> first;
  bool holds = true;
  for (int m = j; m < s; ++m) {
    HilbertFunction h = add_principal_tower(c, qs[static_cast<std::size_t>(m)]).hilbert(top);
    if (hilbert) hilbert->push_back(h.to_string());
    if (!first)
      first = h;
    else if (!(h == *first))
      holds = false;
  }
  return holds;
}

// ------------------------------------------------------------------ verifier

VerificationReport verify(const EghInput& input, const EghResult& result) {
  VerificationReport rep;
  const int n = input.num_vars();
  const Field field = input.field();
  const int top = result.output.truncation();
  rep.truncation = top;
  rep.steps = result.steps;
  rep.lemma20 = result.lemma20;

  const IdealPresentation generated = result.output.presentation(field);
  std::vector<std::uint64_t> hin, hout;
  for (int t = 0; t <= top; ++t) {
    const std::uint64_t total = count_monomials(n, t);
    const std::uint64_t di = ideal_component_direct(input.ideal(), t).dim();
    const std::uint64_t dout = ideal_component_direct(generated, t).dim();
    rep.input_dims.push_back(di);
    rep.output_dims.push_back(dout);
    hin.push_back(total - di);
    hout.push_back(total - dout);
    if (di != dout && !rep.first_divergence) rep.first_divergence = t;
    if (dout != result.output.component(t).size() && !rep.closure_failure) rep.closure_failure = t;
  }
  try {
    rep.input_hilbert = HilbertFunction(hin);
    rep.output_hilbert = HilbertFunction(hout);
  } catch (const ArgumentError& e) {
    rep.problems.push_back(e.what());
  }
  rep.hilbert_equal = !rep.first_divergence;
  if (rep.first_divergence)
    rep.problems.push_back("Hilbert functions differ first at degree " + std::to_string(*rep.first_divergence) + ": " +
                           join(hin) + " vs " + join(hout));

  rep.contains_powers = true;
  for (int i = 1; i <= n; ++i) {
    const int a = input.sequence().degree(i);
    if (a > top) continue;
    const Polynomial power(Monomial::power(n, i, a), Scalar::one(field));
    if (!ideal_component_direct(generated, a).contains(power)) {
      rep.contains_powers = false;
      rep.missing_powers.push_back(power.to_string());
    }
  }
  if (!rep.contains_powers) rep.problems.push_back("output misses pure powers");

  if (auto fail = result.output.closure_failure(); fail && (!rep.closure_failure || *fail < *rep.closure_failure))
    rep.closure_failure = fail;
  rep.closed = !rep.closure_failure;
  if (!rep.closed)
    rep.problems.push_back("stored components are not the ideal they generate, from degree " +
                           std::to_string(*rep.closure_failure));

  rep.lex_plus_powers = is_lex_plus_powers(result.output, input.sequence().degrees());
  for (const auto& r : rep.lemma20)
    if (!r.holds) rep.problems.push_back("slice functions depend on the factor for j=" + std::to_string(r.j));

  rep.ok = rep.problems.empty();
  return rep;
}

}  // namespace splitegh
