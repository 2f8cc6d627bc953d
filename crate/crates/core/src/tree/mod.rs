//! Regular trees as Cayley graphs of `Z/2 * .. * Z/2`, the ball-labeling
//! graph and the multi-fold coloring pipeline.

mod ball;
mod cayley;
mod pipeline;
mod truncated;
mod word;

pub use ball::{
    ball_labeling_graph, ball_labeling_graph_with, labeling_around, tree_to_ball_hom, tree_to_ball_hom_with,
    BallGraph, BallGraphOptions, BallLabeling, BallShape, BallSpace, LabeledNode, TreeBallHom,
};
pub use cayley::{
    ball_size, cayley_ball, cayley_ball_capped, sigma_circuit, sphere, sphere_capped, sphere_size, CayleyBall,
    SigmaCircuit, SphereSet, DEFAULT_WORD_CAP,
};
pub use pipeline::{cycle_to_odd_cycle_hom, kfold_color_pipeline, kfold_color_pipeline_ordered, Layer, PipelineColoring};
pub use truncated::{truncated_tree, truncated_tree_capped, TruncatedTree};
pub use word::{reduce, ReducedWord};
