"""Tour of the three environments: seeded rollouts, exact tabular oracles.

Run:  python3 demos/01_environments.py
"""

import numpy as np

from offlab import envs
from offlab.policies import UniformPolicy

# Cartpole: horizon 1000, reward 1 per upright step.
result = envs.rollout("cartpole", UniformPolicy(3), seed=0, n_episodes=20,
                      record=False)
print(f"cartpole, uniform policy: mean return {result.mean_return:.1f} "
      f"over 20 episodes (min {result.returns.min():.0f}, "
      f"max {result.returns.max():.0f})")

# Catch: horizon 10, return +1 on a catch and -1 on a miss.
result = envs.rollout("catch", UniformPolicy(3), seed=0, n_episodes=200,
                      record=False)
print(f"catch, uniform policy: mean return {result.mean_return:+.2f} "
      f"(chance level is below 0)")

# Determinism: the same seed reproduces the same trajectory bit for bit.
env = envs.make_env("cartpole")
a = env.reset(123)
b = env.reset(123)
print(f"same seed, same start state: {np.array_equal(a, b)}")

# Tabular chain: 5 states, walk right for reward; solved exactly.
chain = envs.chain_mdp()
uniform = np.full((chain.n_states, chain.n_actions), 0.5)
j_uniform, q_uniform = envs.exact_policy_value(chain, uniform)
q_star = envs.value_iteration(chain)
print(f"chain: J(uniform) = {j_uniform:.3f}, "
      f"optimal V(s0) = {q_star[0].max():.3f}")

# Rolling out in the chain environment agrees with the linear-system value.
horizon = 100
roll = envs.rollout(lambda: envs.make_env("tabular", mdp=chain,
                                          horizon=horizon),
                    UniformPolicy(2), seed=0, n_episodes=1000)
disc = chain.gamma ** np.arange(horizon)
mc = np.mean([np.dot(disc[:len(ep)], [t.r for t in ep])
              for ep in roll.episodes])
print(f"chain Monte-Carlo estimate of J(uniform): {mc:.3f} "
      f"(exact {j_uniform:.3f})")
