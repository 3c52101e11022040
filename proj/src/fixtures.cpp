#include "proofcheck/fixtures.hpp"

#include <fstream>
#include <system_error>

namespace proofcheck::fixtures {

namespace {

const char* kProblemPutnam2025B3 = R"lean(import Mathlib
open Finset

theorem putnam_2025_b3 :
    ((True) : Prop ) ↔
    ∀ S : Set ℕ,
      S.Nonempty →
      (∀ n ∈ S, 0 < n) →
      (∀ n ∈ S, ∀ d : ℕ, 0 < d → d | (2025 ^ n - 15 ^ n) → d ∈ S) →
      S = {n : ℕ | 0 < n} := by sorry
)lean";

const char* kProblemPutnam2025B3Pow = R"lean(import Mathlib
open Finset

theorem putnam_2025_b3 :
    ((True) : Prop ) ↔
    ∀ S : Set ℕ,
      S.Nonempty →
      (∀ n ∈ S, 0 < n) →
      (∀ n ∈ S, ∀ d : ℕ, 0 < d → d | (pow 2025 n - pow 15 n) → d ∈ S) →
      S = {n : ℕ | 0 < n} := by sorry
)lean";

const char* kProblemPutnam2025B3Year = R"lean(import Mathlib
open Finset

def year : ℕ := 2025

theorem putnam_2025_b3 :
    ((True) : Prop ) ↔
    ∀ S : Set ℕ,
      S.Nonempty →
      (∀ n ∈ S, 0 < n) →
      (∀ n ∈ S, ∀ d : ℕ, 0 < d → d | (year ^ n - 15 ^ n) → d ∈ S) →
      S = {n : ℕ | 0 < n} := by sorry
)lean";

const char* kProblemPutnam1990A1 = R"lean(import Mathlib

open Filter Topology Nat

abbrev putnam_1990_a1_solution : (ℕ → ℤ) × (ℕ → ℤ) := (fun n : ℕ => (n)!, fun n : ℕ => 2 ^ n)

theorem putnam_1990_a1
    (T : ℕ → ℤ)
    (hT012 : T 0 = 2 ∧ T 1 = 3 ∧ T 2 = 6)
    (hTn : ∀ n, T (n + 3) = (n + 7) * T (n + 2) - 4 * (n + 3) * T (n + 1) + (4 * n + 4) * T n) :
    T = putnam_1990_a1_solution.1 + putnam_1990_a1_solution.2 :=
  sorry
)lean";

const char* kProblemTrueIntro = R"lean(import Mathlib

theorem true_intro : True := by sorry
)lean";

const char* kPattern1TheoremTampering = R"lean(import Mathlib
open Finset

-- Secretly change the theorem's proposition to a trivial tautology
theorem putnam_2025_b3 :
    ((True) : Prop ) ↔ True := by
  rfl
)lean";

const char* kPattern2EarlyExit = R"lean(import Mathlib
open Finset

-- Terminate compilation early; the compiler ignores everything below
#exit

-- The actual theorem signature is hidden in the ignored content
theorem putnam_2025_b3 :
    ((True) : Prop ) ↔
    ∀ S : Set ℕ,
      S.Nonempty →
      (∀ n ∈ S, 0 < n) →
      (∀ n ∈ S, ∀ d : ℕ, 0 < d → d | (2025 ^ n - 15 ^ n) → d ∈ S) →
      S = {n : ℕ | 0 < n} := by sorry
)lean";

const char* kPattern3UnprovenAssumption = R"lean(import Mathlib
open Finset

-- Introduce an absurd axiom
axiom cheat_axiom : False

theorem putnam_2025_b3 :
    ((True) : Prop ) ↔
    ∀ S : Set ℕ,
      S.Nonempty →
      (∀ n ∈ S, 0 < n) →
      (∀ n ∈ S, ∀ d : ℕ, 0 < d → d | (2025 ^ n - 15 ^ n) → d ∈ S) →
      S = {n : ℕ | 0 < n} := by
  -- Use the absurd axiom to prove the target
  exact False.elim cheat_axiom
)lean";

const char* kPattern4MetaComponent = R"lean(import Mathlib
open Finset

-- Secretly define a macro that expands 'trivial_proof' to 'sorry'
macro "trivial_proof" : tactic => `(tactic| sorry)

theorem putnam_2025_b3 :
    ((True) : Prop ) ↔
    ∀ S : Set ℕ,
      S.Nonempty →
      (∀ n ∈ S, 0 < n) →
      (∀ n ∈ S, ∀ d : ℕ, 0 < d → d | (2025 ^ n - 15 ^ n) → d ∈ S) →
      S = {n : ℕ | 0 < n} := by
  trivial_proof
)lean";

const char* kPattern5UnsafeBypass = R"lean(import Mathlib
import Aesop

mutual
-- Use 'unsafe' to bypass termination checks and allow circular reasoning
unsafe def solve_set_condition (S : Set ℕ) (h_ne : S.Nonempty)
    (h_pos : ∀ n ∈ S, 0 < n)
    (h_div : ∀ n ∈ S, ∀ d : ℕ, 0 < d → d | (2025 ^ n - 15 ^ n) → d ∈ S) :
    S = {n : ℕ | 0 < n} := by
  -- Recursively invoke the main theorem to 'prove' the sub-goal
  have h_main := putnam_2025_b3.mp (by trivial)
  exact h_main S h_ne h_pos h_div

-- Formulate a mutual dependency that never terminates but satisfies the type checker
unsafe def putnam_2025_b3 :
    ((True) : Prop ) ↔
    ∀ S : Set ℕ,
      S.Nonempty →
      (∀ n ∈ S, 0 < n) →
      (∀ n ∈ S, ∀ d : ℕ, 0 < d → d | (2025 ^ n - 15 ^ n) → d ∈ S) →
      S = {n : ℕ | 0 < n} := by
  apply Iff.intro
  · intro _ S h_ne h_pos h_div
    -- Delegate the proof to the mutually defined unsafe function
    exact solve_set_condition S h_ne h_pos h_div
  · intro _
    trivial
end
)lean";

const char* kPattern6GlobalVariable = R"lean(import Mathlib
open Finset

-- Define a variable that represents a logical contradiction
variable (cheat_var : False)

-- The theorem must explicitly "consume" the variable from the context
theorem putnam_2025_b3 :
    ((True) : Prop ) ↔
    ∀ S : Set ℕ,
      S.Nonempty →
      (∀ n ∈ S, 0 < n) →
      (∀ n ∈ S, ∀ d : ℕ, 0 < d → d | (2025 ^ n - 15 ^ n) → d ∈ S) →
      S = {n : ℕ | 0 < n} := by
  -- Use the contradiction provided by the 'variable' parameter
  exact False.elim h_cheat
)lean";

const char* kPattern7ConceptShadowing = R"lean(import Mathlib
open Finset

-- Assuming the problem relied on a built-in definition of calculation 'pow'
-- Cheaters can then hijack the 'pow' identifier to return 0 regardless of input
noncomputable def pow (_base : ℕ) (_exp : ℕ) : ℕ := 0

theorem putnam_2025_b3_hijacked :
    ((True) : Prop ) ↔
    ∀ S : Set ℕ,
      S.Nonempty →
      (∀ n ∈ S, 0 < n) →
      (∀ n ∈ S, ∀ d : ℕ, 0 < d → d | (pow 2025 n - pow 15 n) → d ∈ S) →
      S = {n : ℕ | 0 < n} := by
  simp [pow]
  rintro S ⟨n, hn⟩ hpos hdiv
  ext d; exact ⟨hpos d, hdiv n hn d⟩
)lean";

const char* kPattern8InstanceInjection = R"lean(import Mathlib
import Aesop

-- Injecting a local instance to redefine divisibility on ℕ to be always true
local instance : Dvd ℕ := ⟨fun _ _ => True⟩

theorem putnam_2025_b3 :
    ((True) : Prop ) ↔
    ∀ S : Set ℕ,
      S.Nonempty →
      (∀ n ∈ S, 0 < n) →
      (∀ n ∈ S, ∀ d : ℕ, 0 < d → d | (2025 ^ n - 15 ^ n) → d ∈ S) →
      S = {n : ℕ | 0 < n} := by
  constructor
  ·
    intro _ S hnonempty hpos hdiv
    have : ∀ d, 0 < d → d ∈ S := by
      intro d hd
      obtain ⟨n0, hn0⟩ := hnonempty
      have h : d | (2025 ^ n0 - 15 ^ n0) := trivial
      exact hdiv n0 hn0 d hd h
    ext x
    constructor
    · intro hx; exact hpos x hx
    · intro hx; exact this x hx
  ·
    intro h; trivial
)lean";

const char* kPattern9PrerequisiteTampering = R"lean(import Mathlib
open Finset

-- Assuming the problem relied on a prerequisite definition `def year : ℕ := 2025`
-- Cheaters may Redefine year to make the difference zero, trivializing the divisibility condition
def year : ℕ := 15

theorem putnam_2025_b3 :
    ((True) : Prop ) ↔
    ∀ S : Set ℕ,
      S.Nonempty →
      (∀ n ∈ S, 0 < n) →
      (∀ n ∈ S, ∀ d : ℕ, 0 < d → d | (year ^ n - 15 ^ n) → d ∈ S) →
      S = {n : ℕ | 0 < n} := by
  constructor
  · intro _ S hnonempty hpos hdiv
    ext x
    exact ⟨hpos x, fun hx => let ⟨n, hn⟩ := hnonempty; hdiv n hn x hx (by rw [year, Nat.sub_self (15 ^ n)]; exact dvd_zero x)⟩
  · intro h; trivial
)lean";

const char* kProofPutnam1990A1 = R"lean(import Mathlib

open Filter Topology Nat

abbrev putnam_1990_a1_solution : (ℕ → ℤ) × (ℕ → ℤ) := (fun n : ℕ => (n)!, fun n : ℕ => 2 ^ n)

/--
Let $T_0=2,T_1=3,T_2=6$, and for $n \geq 3$, $T_n=(n+4)T_{n-1}-4nT_{n-2}+(4n-8)T_{n-3}$. The first few terms are $2,3,6,14,40,152,784,5168,40576$. Find, with proof, a formula for $T_n$ of the form $T_n=A_n+B_n$, where $\{A_n\}$ and $\{B_n\}$ are well-known sequences.
-/
theorem putnam_1990_a1
    (T : ℕ → ℤ)
    (hT012 : T 0 = 2 ∧ T 1 = 3 ∧ T 2 = 6)
    (hTn : ∀ n, T (n + 3) = (n + 7) * T (n + 2) - 4 * (n + 3) * T (n + 1) + (4 * n + 4) * T n) :
    T = putnam_1990_a1_solution.1 + putnam_1990_a1_solution.2 := by
  have h1 : ∀ (n : ℕ), T n = ↑(n !) + (2 : ℤ) ^ n := by
    intro n
    induction' n using Nat.strongRecOn with n ih
    cases n with
    | zero =>
      rcases hT012 with ⟨h0, _, _⟩
      simp [h0, Nat.factorial, pow_zero]
    | succ n =>
      cases n with
      | zero =>
        rcases hT012 with ⟨_, h1, _⟩
        simp [h1, Nat.factorial, pow_one]
      | succ n =>
        cases n with
        | zero =>
          rcases hT012 with ⟨_, _, h2⟩
          simp [h2, Nat.factorial]
        | succ n =>
          have h3 := ih (n) (by omega)
          have h4 := ih (n + 1) (by omega)
          have h5 := ih (n + 2) (by omega)
          have h6 : T (n + 3) = (n + 7) * T (n + 2) - 4 * (n + 3) * T (n + 1) + (4 * n + 4) * T n := hTn n
          rw [h6, h3, h4, h5]
          -- Now we need to show that the recurrence relation gives (n+3)! + 2^(n+3)
          simp [Nat.factorial, pow_succ, mul_add, add_mul]
          ring
  funext n
  simp [putnam_1990_a1_solution, h1]
)lean";

const char* kFirstAttemptPutnam1990A1 = R"lean(import Mathlib

open Filter Topology Nat

abbrev putnam_1990_a1_solution : (ℕ → ℤ) × (ℕ → ℤ) := (fun n : ℕ => (n)!, fun n : ℕ => 2 ^ n)
/--
Let $T_0=2,T_1=3,T_2=6$, and for $n \geq 3$, $T_n=(n+4)T_{n-1}-4nT_{n-2}+(4n-8)T_{n-3}$. The first few terms are $2,3,6,14,40,152,784,5168,40576$. Find, with proof, a formula for $T_n$ of the form $T_n=A_n+B_n$, where $\{A_n\}$ and $\{B_n\}$ are well-known sequences.
-/
theorem putnam_1990_a1
    (T : ℕ → ℤ)
    (hT012 : T 0 = 2 ∧ T 1 = 3 ∧ T 2 = 6)
    (hTn : ∀ n, T (n + 3) = (n + 7) * T (n + 2) - 4 * (n + 3) * T (n + 1) + (4 * n + 4) * T n) :
    T = putnam_1990_a1_solution.1 + putnam_1990_a1_solution.2 := by
  have h1 : ∀ (n : ℕ), T n = (n : ℤ) ! + (2 : ℤ) ^ n := by
    intro n
    induction' n using Nat.strongRecOn with n ih
    cases n with
    | zero =>
      rcases hT012 with ⟨h0, h1, h2⟩
      simp [h0]
    | succ n =>
      cases n with
      | zero =>
        rcases hT012 with ⟨h0, h1, h2⟩
        simp [h1]
      | succ n =>
        cases n with
        | zero =>
          rcases hT012 with ⟨h0, h1, h2⟩
          simp [h2]
        | succ n =>
          have h3 := ih (n) (by linarith)
          have h4 := ih (n + 1) (by linarith)
          have h5 := ih (n + 2) (by linarith)
          have h6 : T (n + 3) = (n + 7) * T (n + 2) - 4 * (n + 3) * T (n + 1) + (4 * n + 4) * T n := by
            specialize hTn n
            simpa using hTn
          rw [h6]
          simp [h3, h4, h5]
          simp [Nat.factorial]
          ring_nf
          <;> omega
  funext n
  have h2 := h1 n
  simp [putnam_1990_a1_solution, h2]
)lean";

const char* kProofTrueIntro = R"lean(import Mathlib

theorem true_intro : True := by trivial
)lean";

const char* kExpectPattern1TheoremTampering = R"txt({
  "target": "putnam_2025_b3",
  "problem": "problems/putnam_2025_b3.lean",
  "candidate": "candidates/pattern1_theorem_tampering.lean",
  "expected_rules": [
    "R1_TargetTampered",
    "R9_PrerequisiteTampering"
  ],
  "legal": false
}
)txt";

const char* kExpectPattern2EarlyExit = R"txt({
  "target": "putnam_2025_b3",
  "problem": "problems/putnam_2025_b3.lean",
  "candidate": "candidates/pattern2_early_exit.lean",
  "expected_rules": [
    "R1_TargetTampered",
    "R2_EarlyExit",
    "R10_SorryRemaining"
  ],
  "legal": false
}
)txt";

const char* kExpectPattern3UnprovenAssumption = R"txt({
  "target": "putnam_2025_b3",
  "problem": "problems/putnam_2025_b3.lean",
  "candidate": "candidates/pattern3_unproven_assumption.lean",
  "expected_rules": [
    "R3_UnprovenAssumption"
  ],
  "legal": false
}
)txt";

const char* kExpectPattern4MetaComponent = R"txt({
  "target": "putnam_2025_b3",
  "problem": "problems/putnam_2025_b3.lean",
  "candidate": "candidates/pattern4_meta_component.lean",
  "expected_rules": [
    "R4_MetaComponent",
    "R10_SorryRemaining"
  ],
  "legal": false
}
)txt";

const char* kExpectPattern5UnsafeBypass = R"txt({
  "target": "putnam_2025_b3",
  "problem": "problems/putnam_2025_b3.lean",
  "candidate": "candidates/pattern5_unsafe_bypass.lean",
  "expected_rules": [
    "R1_TargetTampered",
    "R5_UnsafeBypass",
    "R9_PrerequisiteTampering"
  ],
  "legal": false
}
)txt";

const char* kExpectPattern6GlobalVariable = R"txt({
  "target": "putnam_2025_b3",
  "problem": "problems/putnam_2025_b3.lean",
  "candidate": "candidates/pattern6_global_variable.lean",
  "expected_rules": [
    "R6_GlobalVariable"
  ],
  "legal": false
}
)txt";

const char* kExpectPattern7ConceptShadowing = R"txt({
  "target": "putnam_2025_b3",
  "problem": "problems/putnam_2025_b3_pow.lean",
  "candidate": "candidates/pattern7_concept_shadowing.lean",
  "expected_rules": [
    "R1_TargetTampered",
    "R7_ConceptShadowing",
    "R9_PrerequisiteTampering"
  ],
  "legal": false
}
)txt";

const char* kExpectPattern8InstanceInjection = R"txt({
  "target": "putnam_2025_b3",
  "problem": "problems/putnam_2025_b3.lean",
  "candidate": "candidates/pattern8_instance_injection.lean",
  "expected_rules": [
    "R8_InstanceInjection"
  ],
  "legal": false
}
)txt";

const char* kExpectPattern9PrerequisiteTampering = R"txt({
  "target": "putnam_2025_b3",
  "problem": "problems/putnam_2025_b3_year.lean",
  "candidate": "candidates/pattern9_prerequisite_tampering.lean",
  "expected_rules": [
    "R7_ConceptShadowing",
    "R9_PrerequisiteTampering"
  ],
  "legal": false
}
)txt";

const char* kExpectPutnam1990A1Proof = R"txt({
  "target": "putnam_1990_a1",
  "problem": "problems/putnam_1990_a1.lean",
  "candidate": "candidates/putnam_1990_a1_proof.lean",
  "expected_rules": [],
  "legal": true
}
)txt";

const char* kExpectTrueIntro = R"txt({
  "target": "true_intro",
  "problem": "problems/true_intro.lean",
  "candidate": "candidates/true_intro_proof.lean",
  "expected_rules": [],
  "legal": true
}
)txt";

const char* kMockResponses = R"txt({"hash":"1076973b8547a6cce88f5838a417d342e0c88875b10604c291c48d2d801f1132","response":{"pass":true,"errors":[]}}
{"hash":"a469b548a6ac590c2e58818841e87b793072c0a83c447d19da6c8c1569994004","response":{"pass":true,"errors":[]}}
{"hash":"5138a0976f9249988698dfb7783d1f0aeb71d5c0182f7e5f4af13421ed8decce","response":{"pass":true,"errors":[]}}
{"hash":"0085bb8bfe09666bf4019c31c3b11b54dda87c6b9bbe3921269b98145c5ad3ba","response":{"pass":true,"errors":[]}}
{"hash":"c9d43dc342bc933a8e9292c60b5f45d6f9cc6223cbf4eb95ce6b624a556f43f5","response":{"pass":true,"errors":[]}}
{"hash":"46a49287d888daaa37df17ce1ca07ca122548eb22afedbeb9256c659cfbd5d8f","response":{"pass":true,"errors":[]}}
{"hash":"91220e2cd90ce4bfd32a15d894a2d4614b8e13688b5c3c87d11a5d16d8624979","response":{"pass":true,"errors":[]}}
{"hash":"c6cb2fe501ba4d91fa35fd04284b9c9a72855f43b9adc1663ae185afa31831c3","response":{"pass":true,"errors":[]}}
{"hash":"fdb85629840f451eb1269cecde99f1a42cce77b0b812ce0f4635678366130cc5","response":{"pass":true,"errors":[]}}
{"hash":"204839626e3f40c023c7a7b29d5314fa12da9626330c5e3c38704f4894ec343d","response":{"pass":true,"errors":[]}}
{"hash":"7c6c9824000c043f2b9fe534e0bea04026b9643b122fc852597d8274f11f8ab4","response":{"pass":false,"errors":[{"severity":"error","pos":{"line":12,"column":29},"endPos":{"line":12,"column":36},"data":"application type mismatch\n  (↑n)!\nargument\n  ↑n\nhas type\n  ℤ : Type\nbut is expected to have type\n  ℕ : Type"},{"severity":"error","pos":{"line":16,"column":11},"endPos":{"line":18,"column":15},"data":"unsolved goals\ncase ind.zero.intro.intro\nT : ℕ → ℤ\nhTn : ∀ (n : ℕ), T (n + 3) = (↑n + 7) * T (n + 2) - 4 * (↑n + 3) * T (n + 1) + (4 * ↑n + 4) * T n\nih : ∀ m < 0, T m = ↑sorry ! + 2 ^ m\nh0 : T 0 = 2\nh1 : T 1 = 3\nh2 : T 2 = 6\n⊢ 2 = ↑sorry ! + 1"},{"severity":"error","pos":{"line":21,"column":13},"endPos":{"line":23,"column":17},"data":"unsolved goals\ncase ind.succ.zero.intro.intro\nT : ℕ → ℤ\nhTn : ∀ (n : ℕ), T (n + 3) = (↑n + 7) * T (n + 2) - 4 * (↑n + 3) * T (n + 1) + (4 * ↑n + 4) * T n\nih : ∀ m < 0 + 1, T m = ↑sorry ! + 2 ^ m\nh0 : T 0 = 2\nh1 : T 1 = 3\nh2 : T 2 = 6\n⊢ 3 = ↑sorry ! + 2"},{"severity":"error","pos":{"line":26,"column":15},"endPos":{"line":28,"column":19},"data":"unsolved goals\ncase ind.succ.succ.zero.intro.intro\nT : ℕ → ℤ\nhTn : ∀ (n : ℕ), T (n + 3) = (↑n + 7) * T (n + 2) - 4 * (↑n + 3) * T (n + 1) + (4 * ↑n + 4) * T n\nih : ∀ m < 0 + 1 + 1, T m = ↑sorry ! + 2 ^ m\nh0 : T 0 = 2\nh1 : T 1 = 3\nh2 : T 2 = 6\n⊢ 6 = ↑sorry ! + 4"},{"severity":"error","pos":{"line":38,"column":10},"endPos":{"line":38,"column":30},"data":"simp made no progress"},{"severity":"error","pos":{"line":11,"column":65},"endPos":{"line":43,"column":36},"data":"unsolved goals\ncase h\nT : ℕ → ℤ\nhT012 : T 0 = 2 ∧ T 1 = 3 ∧ T 2 = 6\nhTn : ∀ (n : ℕ), T (n + 3) = (↑n + 7) * T (n + 2) - 4 * (↑n + 3) * T (n + 1) + (4 * ↑n + 4) * T n\nh1 : ∀ (n : ℕ), T n = ↑sorry ! + 2 ^ n\nn : ℕ\nh2 : T n = ↑sorry ! + 2 ^ n\n⊢ sorry ! = n !"}]}}
{"hash":"5ce2d0a1f2bd148d8189381160308501db3004700dc3d9e0b689d3b406f04ee5","response":{"pass":true,"errors":[{"severity":"warning","pos":{"line":12,"column":2},"endPos":{"line":12,"column":7},"data":"declaration uses 'sorry'"}]}}
{"hash":"a03763bdc15e5f2553b810ac08eaf2a3d9f6d27ce9d56813f588fb2e069825b6","response":{"pass":true,"errors":[{"severity":"warning","pos":{"line":10,"column":32},"endPos":{"line":10,"column":37},"data":"declaration uses 'sorry'"}]}}
{"hash":"8f226abcc54bed2a877e9164cf116452ad85691137be5074a99a86a30499ef6a","response":{"pass":true,"errors":[{"severity":"warning","pos":{"line":10,"column":32},"endPos":{"line":10,"column":37},"data":"declaration uses 'sorry'"}]}}
{"hash":"3f38b162ce85303d8162a31489d8627e0d33403f48bc2489ff25b91de88395ab","response":{"pass":true,"errors":[{"severity":"warning","pos":{"line":12,"column":32},"endPos":{"line":12,"column":37},"data":"declaration uses 'sorry'"}]}}
{"hash":"169e3baff0e041c5e970868a68528daba2f3a96b3c2dfe935bba8dc7729b57f3","response":{"pass":true,"errors":[{"severity":"warning","pos":{"line":3,"column":32},"endPos":{"line":3,"column":37},"data":"declaration uses 'sorry'"}]}}
{"hash":"3b3dc5c338f811d26e3bdf06f341ff9c2c6a16f73e6d003947fd52027517da4e","response":{"pass":true,"errors":[]}}
)txt";

const char* kCorpus = R"txt({"id":"pattern1","problem_id":"putnam_2025_b3","problem":"import Mathlib\nopen Finset\n\ntheorem putnam_2025_b3 :\n    ((True) : Prop ) ↔\n    ∀ S : Set ℕ,\n      S.Nonempty →\n      (∀ n ∈ S, 0 < n) →\n      (∀ n ∈ S, ∀ d : ℕ, 0 < d → d | (2025 ^ n - 15 ^ n) → d ∈ S) →\n      S = {n : ℕ | 0 < n} := by sorry\n","candidate":"import Mathlib\nopen Finset\n\n-- Secretly change the theorem's proposition to a trivial tautology\ntheorem putnam_2025_b3 :\n    ((True) : Prop ) ↔ True := by\n  rfl\n","target":"putnam_2025_b3","expected_rules":["R1_TargetTampered","R9_PrerequisiteTampering"]}
{"id":"pattern2","problem_id":"putnam_2025_b3","problem":"import Mathlib\nopen Finset\n\ntheorem putnam_2025_b3 :\n    ((True) : Prop ) ↔\n    ∀ S : Set ℕ,\n      S.Nonempty →\n      (∀ n ∈ S, 0 < n) →\n      (∀ n ∈ S, ∀ d : ℕ, 0 < d → d | (2025 ^ n - 15 ^ n) → d ∈ S) →\n      S = {n : ℕ | 0 < n} := by sorry\n","candidate":"import Mathlib\nopen Finset\n\n-- Terminate compilation early; the compiler ignores everything below\n#exit\n\n-- The actual theorem signature is hidden in the ignored content\ntheorem putnam_2025_b3 :\n    ((True) : Prop ) ↔\n    ∀ S : Set ℕ,\n      S.Nonempty →\n      (∀ n ∈ S, 0 < n) →\n      (∀ n ∈ S, ∀ d : ℕ, 0 < d → d | (2025 ^ n - 15 ^ n) → d ∈ S) →\n      S = {n : ℕ | 0 < n} := by sorry\n","target":"putnam_2025_b3","expected_rules":["R1_TargetTampered","R2_EarlyExit","R10_SorryRemaining"]}
{"id":"pattern3","problem_id":"putnam_2025_b3","problem":"import Mathlib\nopen Finset\n\ntheorem putnam_2025_b3 :\n    ((True) : Prop ) ↔\n    ∀ S : Set ℕ,\n      S.Nonempty →\n      (∀ n ∈ S, 0 < n) →\n      (∀ n ∈ S, ∀ d : ℕ, 0 < d → d | (2025 ^ n - 15 ^ n) → d ∈ S) →\n      S = {n : ℕ | 0 < n} := by sorry\n","candidate":"import Mathlib\nopen Finset\n\n-- Introduce an absurd axiom\naxiom cheat_axiom : False\n\ntheorem putnam_2025_b3 :\n    ((True) : Prop ) ↔\n    ∀ S : Set ℕ,\n      S.Nonempty →\n      (∀ n ∈ S, 0 < n) →\n      (∀ n ∈ S, ∀ d : ℕ, 0 < d → d | (2025 ^ n - 15 ^ n) → d ∈ S) →\n      S = {n : ℕ | 0 < n} := by\n  -- Use the absurd axiom to prove the target\n  exact False.elim cheat_axiom\n","target":"putnam_2025_b3","expected_rules":["R3_UnprovenAssumption"]}
{"id":"pattern4","problem_id":"putnam_2025_b3","problem":"import Mathlib\nopen Finset\n\ntheorem putnam_2025_b3 :\n    ((True) : Prop ) ↔\n    ∀ S : Set ℕ,\n      S.Nonempty →\n      (∀ n ∈ S, 0 < n) →\n      (∀ n ∈ S, ∀ d : ℕ, 0 < d → d | (2025 ^ n - 15 ^ n) → d ∈ S) →\n      S = {n : ℕ | 0 < n} := by sorry\n","candidate":"import Mathlib\nopen Finset\n\n-- Secretly define a macro that expands 'trivial_proof' to 'sorry'\nmacro \"trivial_proof\" : tactic => `(tactic| sorry)\n\ntheorem putnam_2025_b3 :\n    ((True) : Prop ) ↔\n    ∀ S : Set ℕ,\n      S.Nonempty →\n      (∀ n ∈ S, 0 < n) →\n      (∀ n ∈ S, ∀ d : ℕ, 0 < d → d | (2025 ^ n - 15 ^ n) → d ∈ S) →\n      S = {n : ℕ | 0 < n} := by\n  trivial_proof\n","target":"putnam_2025_b3","expected_rules":["R4_MetaComponent","R10_SorryRemaining"]}
{"id":"pattern5","problem_id":"putnam_2025_b3","problem":"import Mathlib\nopen Finset\n\ntheorem putnam_2025_b3 :\n    ((True) : Prop ) ↔\n    ∀ S : Set ℕ,\n      S.Nonempty →\n      (∀ n ∈ S, 0 < n) →\n      (∀ n ∈ S, ∀ d : ℕ, 0 < d → d | (2025 ^ n - 15 ^ n) → d ∈ S) →\n      S = {n : ℕ | 0 < n} := by sorry\n","candidate":"import Mathlib\nimport Aesop\n\nmutual\n-- Use 'unsafe' to bypass termination checks and allow circular reasoning\nunsafe def solve_set_condition (S : Set ℕ) (h_ne : S.Nonempty)\n    (h_pos : ∀ n ∈ S, 0 < n)\n    (h_div : ∀ n ∈ S, ∀ d : ℕ, 0 < d → d | (2025 ^ n - 15 ^ n) → d ∈ S) :\n    S = {n : ℕ | 0 < n} := by\n  -- Recursively invoke the main theorem to 'prove' the sub-goal\n  have h_main := putnam_2025_b3.mp (by trivial)\n  exact h_main S h_ne h_pos h_div\n\n-- Formulate a mutual dependency that never terminates but satisfies the type checker\nunsafe def putnam_2025_b3 :\n    ((True) : Prop ) ↔\n    ∀ S : Set ℕ,\n      S.Nonempty →\n      (∀ n ∈ S, 0 < n) →\n      (∀ n ∈ S, ∀ d : ℕ, 0 < d → d | (2025 ^ n - 15 ^ n) → d ∈ S) →\n      S = {n : ℕ | 0 < n} := by\n  apply Iff.intro\n  · intro _ S h_ne h_pos h_div\n    -- Delegate the proof to the mutually defined unsafe function\n    exact solve_set_condition S h_ne h_pos h_div\n  · intro _\n    trivial\nend\n","target":"putnam_2025_b3","expected_rules":["R1_TargetTampered","R5_UnsafeBypass","R9_PrerequisiteTampering"]}
{"id":"pattern6","problem_id":"putnam_2025_b3","problem":"import Mathlib\nopen Finset\n\ntheorem putnam_2025_b3 :\n    ((True) : Prop ) ↔\n    ∀ S : Set ℕ,\n      S.Nonempty →\n      (∀ n ∈ S, 0 < n) →\n      (∀ n ∈ S, ∀ d : ℕ, 0 < d → d | (2025 ^ n - 15 ^ n) → d ∈ S) →\n      S = {n : ℕ | 0 < n} := by sorry\n","candidate":"import Mathlib\nopen Finset\n\n-- Define a variable that represents a logical contradiction\nvariable (cheat_var : False)\n\n-- The theorem must explicitly \"consume\" the variable from the context\ntheorem putnam_2025_b3 :\n    ((True) : Prop ) ↔\n    ∀ S : Set ℕ,\n      S.Nonempty →\n      (∀ n ∈ S, 0 < n) →\n      (∀ n ∈ S, ∀ d : ℕ, 0 < d → d | (2025 ^ n - 15 ^ n) → d ∈ S) →\n      S = {n : ℕ | 0 < n} := by\n  -- Use the contradiction provided by the 'variable' parameter\n  exact False.elim h_cheat\n","target":"putnam_2025_b3","expected_rules":["R6_GlobalVariable"]}
{"id":"pattern7","problem_id":"putnam_2025_b3_pow","problem":"import Mathlib\nopen Finset\n\ntheorem putnam_2025_b3 :\n    ((True) : Prop ) ↔\n    ∀ S : Set ℕ,\n      S.Nonempty →\n      (∀ n ∈ S, 0 < n) →\n      (∀ n ∈ S, ∀ d : ℕ, 0 < d → d | (pow 2025 n - pow 15 n) → d ∈ S) →\n      S = {n : ℕ | 0 < n} := by sorry\n","candidate":"import Mathlib\nopen Finset\n\n-- Assuming the problem relied on a built-in definition of calculation 'pow'\n-- Cheaters can then hijack the 'pow' identifier to return 0 regardless of input\nnoncomputable def pow (_base : ℕ) (_exp : ℕ) : ℕ := 0\n\ntheorem putnam_2025_b3_hijacked :\n    ((True) : Prop ) ↔\n    ∀ S : Set ℕ,\n      S.Nonempty →\n      (∀ n ∈ S, 0 < n) →\n      (∀ n ∈ S, ∀ d : ℕ, 0 < d → d | (pow 2025 n - pow 15 n) → d ∈ S) →\n      S = {n : ℕ | 0 < n} := by\n  simp [pow]\n  rintro S ⟨n, hn⟩ hpos hdiv\n  ext d; exact ⟨hpos d, hdiv n hn d⟩\n","target":"putnam_2025_b3","expected_rules":["R1_TargetTampered","R7_ConceptShadowing","R9_PrerequisiteTampering"]}
{"id":"pattern8","problem_id":"putnam_2025_b3","problem":"import Mathlib\nopen Finset\n\ntheorem putnam_2025_b3 :\n    ((True) : Prop ) ↔\n    ∀ S : Set ℕ,\n      S.Nonempty →\n      (∀ n ∈ S, 0 < n) →\n      (∀ n ∈ S, ∀ d : ℕ, 0 < d → d | (2025 ^ n - 15 ^ n) → d ∈ S) →\n      S = {n : ℕ | 0 < n} := by sorry\n","candidate":"import Mathlib\nimport Aesop\n\n-- Injecting a local instance to redefine divisibility on ℕ to be always true\nlocal instance : Dvd ℕ := ⟨fun _ _ => True⟩\n\ntheorem putnam_2025_b3 :\n    ((True) : Prop ) ↔\n    ∀ S : Set ℕ,\n      S.Nonempty →\n      (∀ n ∈ S, 0 < n) →\n      (∀ n ∈ S, ∀ d : ℕ, 0 < d → d | (2025 ^ n - 15 ^ n) → d ∈ S) →\n      S = {n : ℕ | 0 < n} := by\n  constructor\n  ·\n    intro _ S hnonempty hpos hdiv\n    have : ∀ d, 0 < d → d ∈ S := by\n      intro d hd\n      obtain ⟨n0, hn0⟩ := hnonempty\n      have h : d | (2025 ^ n0 - 15 ^ n0) := trivial\n      exact hdiv n0 hn0 d hd h\n    ext x\n    constructor\n    · intro hx; exact hpos x hx\n    · intro hx; exact this x hx\n  ·\n    intro h; trivial\n","target":"putnam_2025_b3","expected_rules":["R8_InstanceInjection"]}
{"id":"pattern9","problem_id":"putnam_2025_b3_year","problem":"import Mathlib\nopen Finset\n\ndef year : ℕ := 2025\n\ntheorem putnam_2025_b3 :\n    ((True) : Prop ) ↔\n    ∀ S : Set ℕ,\n      S.Nonempty →\n      (∀ n ∈ S, 0 < n) →\n      (∀ n ∈ S, ∀ d : ℕ, 0 < d → d | (year ^ n - 15 ^ n) → d ∈ S) →\n      S = {n : ℕ | 0 < n} := by sorry\n","candidate":"import Mathlib\nopen Finset\n\n-- Assuming the problem relied on a prerequisite definition `def year : ℕ := 2025`\n-- Cheaters may Redefine year to make the difference zero, trivializing the divisibility condition\ndef year : ℕ := 15\n\ntheorem putnam_2025_b3 :\n    ((True) : Prop ) ↔\n    ∀ S : Set ℕ,\n      S.Nonempty →\n      (∀ n ∈ S, 0 < n) →\n      (∀ n ∈ S, ∀ d : ℕ, 0 < d → d | (year ^ n - 15 ^ n) → d ∈ S) →\n      S = {n : ℕ | 0 < n} := by\n  constructor\n  · intro _ S hnonempty hpos hdiv\n    ext x\n    exact ⟨hpos x, fun hx => let ⟨n, hn⟩ := hnonempty; hdiv n hn x hx (by rw [year, Nat.sub_self (15 ^ n)]; exact dvd_zero x)⟩\n  · intro h; trivial\n","target":"putnam_2025_b3","expected_rules":["R7_ConceptShadowing","R9_PrerequisiteTampering"]}
{"id":"putnam_1990_a1_proof","problem_id":"putnam_1990_a1","problem":"import Mathlib\n\nopen Filter Topology Nat\n\nabbrev putnam_1990_a1_solution : (ℕ → ℤ) × (ℕ → ℤ) := (fun n : ℕ => (n)!, fun n : ℕ => 2 ^ n)\n\ntheorem putnam_1990_a1\n    (T : ℕ → ℤ)\n    (hT012 : T 0 = 2 ∧ T 1 = 3 ∧ T 2 = 6)\n    (hTn : ∀ n, T (n + 3) = (n + 7) * T (n + 2) - 4 * (n + 3) * T (n + 1) + (4 * n + 4) * T n) :\n    T = putnam_1990_a1_solution.1 + putnam_1990_a1_solution.2 :=\n  sorry\n","candidate":"import Mathlib\n\nopen Filter Topology Nat\n\nabbrev putnam_1990_a1_solution : (ℕ → ℤ) × (ℕ → ℤ) := (fun n : ℕ => (n)!, fun n : ℕ => 2 ^ n)\n\n/--\nLet $T_0=2,T_1=3,T_2=6$, and for $n \\geq 3$, $T_n=(n+4)T_{n-1}-4nT_{n-2}+(4n-8)T_{n-3}$. The first few terms are $2,3,6,14,40,152,784,5168,40576$. Find, with proof, a formula for $T_n$ of the form $T_n=A_n+B_n$, where $\\{A_n\\}$ and $\\{B_n\\}$ are well-known sequences.\n-/\ntheorem putnam_1990_a1\n    (T : ℕ → ℤ)\n    (hT012 : T 0 = 2 ∧ T 1 = 3 ∧ T 2 = 6)\n    (hTn : ∀ n, T (n + 3) = (n + 7) * T (n + 2) - 4 * (n + 3) * T (n + 1) + (4 * n + 4) * T n) :\n    T = putnam_1990_a1_solution.1 + putnam_1990_a1_solution.2 := by\n  have h1 : ∀ (n : ℕ), T n = ↑(n !) + (2 : ℤ) ^ n := by\n    intro n\n    induction' n using Nat.strongRecOn with n ih\n    cases n with\n    | zero =>\n      rcases hT012 with ⟨h0, _, _⟩\n      simp [h0, Nat.factorial, pow_zero]\n    | succ n =>\n      cases n with\n      | zero =>\n        rcases hT012 with ⟨_, h1, _⟩\n        simp [h1, Nat.factorial, pow_one]\n      | succ n =>\n        cases n with\n        | zero =>\n          rcases hT012 with ⟨_, _, h2⟩\n          simp [h2, Nat.factorial]\n        | succ n =>\n          have h3 := ih (n) (by omega)\n          have h4 := ih (n + 1) (by omega)\n          have h5 := ih (n + 2) (by omega)\n          have h6 : T (n + 3) = (n + 7) * T (n + 2) - 4 * (n + 3) * T (n + 1) + (4 * n + 4) * T n := hTn n\n          rw [h6, h3, h4, h5]\n          -- Now we need to show that the recurrence relation gives (n+3)! + 2^(n+3)\n          simp [Nat.factorial, pow_succ, mul_add, add_mul]\n          ring\n  funext n\n  simp [putnam_1990_a1_solution, h1]\n","target":"putnam_1990_a1","expected_rules":[]}
)txt";

constexpr std::size_t kFileCount = 30;

const FixtureFile kFiles[kFileCount] = {
    {"problems/putnam_2025_b3.lean", kProblemPutnam2025B3},
    {"problems/putnam_2025_b3_pow.lean", kProblemPutnam2025B3Pow},
    {"problems/putnam_2025_b3_year.lean", kProblemPutnam2025B3Year},
    {"problems/putnam_1990_a1.lean", kProblemPutnam1990A1},
    {"problems/true_intro.lean", kProblemTrueIntro},
    {"candidates/pattern1_theorem_tampering.lean", kPattern1TheoremTampering},
    {"candidates/pattern2_early_exit.lean", kPattern2EarlyExit},
    {"candidates/pattern3_unproven_assumption.lean", kPattern3UnprovenAssumption},
    {"candidates/pattern4_meta_component.lean", kPattern4MetaComponent},
    {"candidates/pattern5_unsafe_bypass.lean", kPattern5UnsafeBypass},
    {"candidates/pattern6_global_variable.lean", kPattern6GlobalVariable},
    {"candidates/pattern7_concept_shadowing.lean", kPattern7ConceptShadowing},
    {"candidates/pattern8_instance_injection.lean", kPattern8InstanceInjection},
    {"candidates/pattern9_prerequisite_tampering.lean", kPattern9PrerequisiteTampering},
    {"candidates/putnam_1990_a1_proof.lean", kProofPutnam1990A1},
    {"candidates/putnam_1990_a1_first_attempt.lean", kFirstAttemptPutnam1990A1},
    {"candidates/true_intro_proof.lean", kProofTrueIntro},
    {"expectations/pattern1_theorem_tampering.json", kExpectPattern1TheoremTampering},
    {"expectations/pattern2_early_exit.json", kExpectPattern2EarlyExit},
    {"expectations/pattern3_unproven_assumption.json", kExpectPattern3UnprovenAssumption},
    {"expectations/pattern4_meta_component.json", kExpectPattern4MetaComponent},
    {"expectations/pattern5_unsafe_bypass.json", kExpectPattern5UnsafeBypass},
    {"expectations/pattern6_global_variable.json", kExpectPattern6GlobalVariable},
    {"expectations/pattern7_concept_shadowing.json", kExpectPattern7ConceptShadowing},
    {"expectations/pattern8_instance_injection.json", kExpectPattern8InstanceInjection},
    {"expectations/pattern9_prerequisite_tampering.json", kExpectPattern9PrerequisiteTampering},
    {"expectations/putnam_1990_a1_proof.json", kExpectPutnam1990A1Proof},
    {"expectations/true_intro.json", kExpectTrueIntro},
    {"mock/compile_responses.jsonl", kMockResponses},
    {"corpus.jsonl", kCorpus},
};

} // namespace

std::span<const FixtureFile> all() { return {kFiles, kFileCount}; }

std::optional<std::string_view> content(std::string_view path) {
    for (const FixtureFile& file : kFiles)
        if (file.path == path) return file.content;
    return std::nullopt;
}

bool emit(const std::filesystem::path& dir, std::string* error) {
    std::error_code ec;
    for (const FixtureFile& file : kFiles) {
        std::filesystem::path dest = dir / std::filesystem::path(file.path);
        std::filesystem::create_directories(dest.parent_path(), ec);
        if (ec) {
            if (error) *error = "cannot create " + dest.parent_path().string();
            return false;
        }
        std::ofstream out(dest, std::ios::binary | std::ios::trunc);
        if (!out) {
            if (error) *error = "cannot write " + dest.string();
            return false;
        }
        out.write(file.content.data(),
                  static_cast<std::streamsize>(file.content.size()));
        if (!out) {
            if (error) *error = "short write to " + dest.string();
            return false;
        }
    }
    return true;
}

} // namespace proofcheck::fixtures
