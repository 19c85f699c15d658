//! Exhaustive check of one order, with a checkpoint that survives interruption.
//!
//! cargo run --release --example verify_campaign -- 8

use domsum::campaign::read_checkpoint;
use domsum::{verify_order, CampaignConfig, CampaignReport, SourceDescriptor};

fn main() -> domsum::Result<()> {
    let n: usize = std::env::args().nth(1).map_or(Ok(7), |a| a.parse()).expect("order");
    let workers = std::thread::available_parallelism().map_or(1, |w| w.get());
    let dir = std::env::temp_dir().join(format!("domsum-example-{}", std::process::id()));
    std::fs::create_dir_all(&dir)?;
    let checkpoint = dir.join(format!("order{n}.ckpt"));

    // stop after two batches, then resume from the checkpoint
    let interrupted = CampaignConfig {
        workers,
        checkpoint: Some(checkpoint.clone()),
        max_batches: Some(2),
        chunk_size: 64,
        chunks_per_batch: 4,
        ..CampaignConfig::default()
    };
    let partial = verify_order(n, &SourceDescriptor::CanonicalGeneration, &interrupted)?;
    println!("stopped after {} graphs, complete = {}", partial.graphs_seen, partial.complete);
    assert_eq!(read_checkpoint(&checkpoint)?, partial);

    let resume = CampaignConfig {
        max_batches: None,
        ..interrupted
    };
    let state = verify_order(n, &SourceDescriptor::CanonicalGeneration, &resume)?;
    println!("{}", serde_json::to_string_pretty(&CampaignReport::from(&state))?);
    std::fs::remove_dir_all(&dir)?;
    Ok(())
}
