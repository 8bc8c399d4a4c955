"""Sentiment-aware news recommendation.

Four dictionary scorers vote an article-level consensus, a softmax classifier
fuses their scores into a probability triple, and a tabular Q-learning agent
turns those sentiment states into recommendation actions, trainable against a
simulated reader or live human feedback.
"""

__version__ = "0.1.0"
