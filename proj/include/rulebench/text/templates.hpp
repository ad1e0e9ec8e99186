#ifndef RULEBENCH_TEXT_TEMPLATES_HPP
#define RULEBENCH_TEXT_TEMPLATES_HPP

// Fixed prompt templates. These strings are contract text: downstream caches
// key on their bytes and the snapshot tests pin them, so any edit here is a
// breaking change. Keep the unicode arrows/dashes exactly as written.

namespace rulebench {

// Marker inside kInductionTemplate replaced by the rendered transcript.
inline constexpr const char* kTranscriptMarker = "(...insert game transcripts here...)";

inline constexpr const char* kInductionTemplate =
    R"TPL((Background Information)
You are an agent tasked with discovering how a certain game works. The rules of the game are unknown to you in advance. However, you are given a full gameplay transcript from a single episode, showing the actions taken and whether they resulted in success or failure. The rule used in each episode is internally consistent, but may differ across episodes. Your goal is to infer this rule by observing what patterns emerge in the examples.

(Instruction)
Carefully analyze the episode shown below. Use only the observed behavior and outcomes to deduce the underlying rule. Be precise and concise. Your response should summarize the rule as clearly as possible, in natural language. Do not speculate beyond the given examples.

Do not list the examples again. Do not include uncertainty statements ("it might be...", "perhaps..."). Just state the rule that best explains the episode.

(...insert game transcripts here...)

(Output Format)
Your response should follow this format:
Induced Rule: <your concise natural language description>)TPL";

// Three-phase decomposition scaffold (entity extraction, rule induction,
// rule verification).
inline constexpr const char* kDecompositionTemplate =
    R"TPL(You are given a complex reasoning task. Follow the structured reasoning steps below. Each step includes internal sub-steps to ensure clarity and alignment with the task goal.

Step 1: Identify and organize relevant entities.
Break the input into interpretable components. Answer the following sub-questions:
-- What are the basic elements in the input (e.g., cards, pieces, dice)?
-- What attributes are associated with each element (e.g., suit, number, position, color)?
-- Are there groupings, repetitions, or orderings that might matter (e.g., same suit, consecutive values)?
-- Represent the input in a structured, canonical form for downstream rule inference.

Step 2: Induce candidate rule(s) from prior context.
Based on previous examples or observed patterns, hypothesize a rule that could explain the current or past cases. Sub-steps:
-- Look for shared properties among successful examples (e.g., all include a prime number sequence).
-- Consider combinations of attributes that might define a category (e.g., "all red cards", "adjacent positions", "triplets").
-- Formulate one or more abstract rules using natural language or logical expressions.
-- If multiple rules seem possible, rank or explain them by plausibility.

Step 3: Verify the inferred rule against the current input.
Apply your proposed rule(s) to this instance. Proceed with the following:
-- Does the structured input satisfy the rule exactly?
-- If partially satisfied, explain which components match or fail.
-- If none match, state clearly why the rule does not apply.
-- Conclude with a binary result (rule matched / not matched), and explain how the final decision is reached.)TPL";

// Grounded step-by-step narrative that discourages arithmetic shortcuts.
inline constexpr const char* kSolvingTemplate =
    R"TPL(Getting a sense of the setup
I'm looking over the current configuration. There's a set of game elements—cards, pieces, or dice—arranged within a defined structure. I begin by scanning each entity and noting its type, position, and any immediate groupings. I try to understand what roles these elements might play, and whether any of them are marked, repeated, or stand out visually. Once I have a general grasp, I start mapping the layout mentally so I can refer back to it during analysis.

Spotting initial patterns
As I move through the input, some patterns begin to emerge. I see repeated forms—like similar numbers, mirrored types, or alternating colors. In some cases, specific alignments appear intentional, like a row of matching elements or a cluster that resembles a known configuration. I note these early signals and consider whether they resemble any previous examples I've worked with. These patterns may not yet define a rule, but they give me a starting point.

Tracking how things evolve
Now I focus on changes—movements, replacements, or newly introduced elements. I observe which parts of the structure are dynamic and whether these shifts maintain or break previous patterns. For example, if a card swaps position or a piece moves diagonally, I check if that action matches others I've seen. I also look at directionality and symmetry: are changes centered around a pivot? Are actions constrained to certain zones? All of this helps me refine how the system behaves.

Interpreting the intent
I try to understand not just what changed, but why. The observed actions feel deliberate, so I begin thinking about what constraints or goals might be shaping them. Perhaps certain moves are legal only under hidden conditions, or some combinations gain value due to an unknown rule. I think about whether the system rewards alignment, diversity, or some balance in composition. This lets me go beyond just pattern matching—I'm starting to infer purpose.

Refining the hypothesis
Now I compare my current case with earlier examples. I'm looking for consistency: do similar setups always lead to the same outcome? I check whether specific attributes—like color sequences or paired entities—reappear under the same conditions. If they do, my hypothesis strengthens. If not, I adjust. I also check for edge cases that might help distinguish between competing rules. The more I refine, the clearer the rule's shape becomes.

Committing to a conclusion
With all this in mind, I'm ready to decide. The current setup aligns with the rule I've been building. I see enough evidence—through repetition, structure, and behavior—to commit to an answer. There's no need for math here; it's the alignment between elements and rules that matters. I finalize my judgment and prepare to apply this same logic again if needed.)TPL";

// Hard output budget; pairs with a 1000-token cap on the request itself.
inline constexpr const char* kSummarizationTemplate =
    R"TPL(You are given a reasoning task. Please approach it step by step, with each step clear and concise.
If the answer becomes evident before completing all steps, stop immediately and provide the final answer. DO NOT continue reasoning once the question is resolved.
Your total output must stay within 1000 tokens.
Excessive or unnecessary reasoning beyond this limit will be considered invalid.)TPL";

inline constexpr int kSummarizationTokenCap = 1000;

// Binary semantic-equivalence judgment. Placeholders are substituted by
// build_judge_prompt; none may survive in the final prompt.
inline constexpr const char* kJudgeTemplate =
    R"TPL(You are given a reasoning task involving [GAME TYPE].

Below is the ground-truth rule and a model's hypothesis.

Decide whether the hypothesis matches the ground-truth rule in semantics.

Ground-truth rule: [INSERT TRUE RULE]

Model-induced rule: [INSERT MODEL RULE]

Answer with: "Yes, the induced rule matches the ground-truth." or "No, the induced rule does not match." Briefly explain your reasoning in one sentence.)TPL";

}  // namespace rulebench

#endif  // RULEBENCH_TEXT_TEMPLATES_HPP
